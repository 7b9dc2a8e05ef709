#pragma once

// Closed-form ranges and Fekete–Szegő bounds for A_{φ,ψ} and B_{φ,ψ}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>

#include "coeffbody/error.hpp"
#include "coeffbody/families.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

/// Default absolute slack for disk membership.
inline constexpr double kDiskTol = 1e-9;

struct DiskRange {
    Complex center = 0.0;
    double radius = 0.0;

    double distance(Complex z) const { return std::abs(z - center); }
    bool contains(Complex z, double tol = kDiskTol) const { return distance(z) <= radius + tol; }
    /// Largest modulus over the closed disk.
    double max_modulus() const { return std::abs(center) + radius; }
};

struct BoundReport {
    double value = 0.0;
    std::string branch;
    std::optional<BlaschkeWitness> witness;  // ω attaining the bound, when one exists
    bool sharp = false;
};

/// Φ_n(f, λ) = f_n f_{n+2} - λ f_{n+1}².
inline Complex fekete_szego(const TruncatedSeries& f, std::size_t n, Complex lambda) {
    if (f.order() < n + 2) {
        throw DomainError(errc::short_input, "Φ_" + std::to_string(n) + " needs a jet of order >= " +
                                                 std::to_string(n + 2));
    }
    return f[n] * f[n + 2] - lambda * f[n + 1] * f[n + 1];
}

/// max_{x∈[0,1]} A x² + 2B x + C.
inline double quad_max(double A, double B, double C) {
    if (A + B < 0.0 && B > 0.0) return C - B * B / A;
    return std::max(A + 2.0 * B + C, C);
}

// ---------------------------------------------------------------------------
// Coefficient ranges

/// b_2 ∈ closed disk(-α_2β_0b³, |α_1β_1||b|³).
inline DiskRange range_b2(const FamilySpec& spec) {
    const Complex b = spec.b();
    const Complex b3 = b * b * b;
    return {-spec.alpha(2) * spec.beta(0) * b3, std::abs(spec.alpha(1) * spec.beta(1)) * std::abs(b3)};
}

/// Disk for b_3 given the first Schur parameter γ_1 of ω.
///
/// β_1 != 0: center b⁵[β_0²α̃ + 3α_1α_2β_0β_1γ_1 + α_1²β̃γ_1²], radius |b|⁴|α_1β_1|(1-|γ_1|²).
/// β_1 = 0:  center b⁵β_0²α̃, radius |b|⁴|α_1β_2| (zero when β_2 = 0 too); γ_1 is not used.
inline DiskRange range_b3(const FamilySpec& spec, Complex gamma1) {
    const double g = std::abs(gamma1);
    if (g > 1.0 + 1e-12) throw DomainError(errc::outside_disk, "range_b3 needs |γ_1| <= 1");
    const Complex b = spec.b();
    const Complex b4 = b * b * b * b;
    const Complex b5 = b4 * b;
    const Complex a1 = spec.alpha(1), a2 = spec.alpha(2);
    const Complex beta0 = spec.beta(0), beta1 = spec.beta(1), beta2 = spec.beta(2);
    if (beta1 != Complex(0.0)) {
        const Complex center = b5 * (beta0 * beta0 * spec.alpha_tilde() + 3.0 * a1 * a2 * beta0 * beta1 * gamma1 +
                                     a1 * a1 * spec.beta_tilde() * gamma1 * gamma1);
        const double radius = std::abs(b4) * std::abs(a1 * beta1) * std::max(0.0, 1.0 - g * g);
        return {center, radius};
    }
    return {b5 * beta0 * beta0 * spec.alpha_tilde(), std::abs(b4) * std::abs(a1 * beta2)};
}

/// Disk for b_n given γ_1..γ_{n-2} (all strictly inside the unit disk).
///
/// b_n is complex-affine in γ_{n-1}, so the disk is traced by γ_{n-1} ∈ closed unit disk:
/// center at γ_{n-1} = 0 and radius |Φ_n(γ_{n-1} = 1) - center|.
inline DiskRange range_generic(const FamilySpec& spec, const SchurSequence& gammas, std::size_t n) {
    if (n < 2) throw DomainError(errc::bad_index, "range_generic needs n >= 2");
    SchurSequence probe;
    probe.gammas.reserve(n - 1);
    for (std::size_t j = 1; j + 2 <= n; ++j) {
        const Complex g = gammas.gamma(j);
        if (!(std::abs(g) < 1.0)) {
            throw DomainError(errc::outside_disk, "range_generic needs |γ_j| < 1 for j <= n-2");
        }
        probe.gammas.push_back(g);
    }
    probe.gammas.push_back(0.0);
    const Complex center = body_point(spec, probe, n).back();
    probe.gammas.back() = 1.0;
    const Complex edge = body_point(spec, probe, n).back();
    return {center, std::abs(edge - center)};
}

// ---------------------------------------------------------------------------
// Fekete–Szegő bounds, φ starlike or convex and ψ = ψ_δ

namespace detail {

/// κ(λ) of the starlike bound. Inside the guard band around the boundary of
/// Δ_δ = {λ : |1-2λ(1-δ)| + |1-2λ| < 1} both branches are evaluated and the max kept.
inline double kappa(double delta, Complex lambda, std::string* branch = nullptr) {
    constexpr double guard = 1e-12;
    const double s = 2.0 * (1.0 - delta);
    const double p = std::abs(1.0 - lambda * s);
    const double q = std::abs(1.0 - 2.0 * lambda);
    const double t = p + q;
    const double outside = p + 2.0 * q;
    auto inside = [&] { return 1.0 + q * q / (1.0 - p); };
    if (t < 1.0 - guard) {
        if (branch) *branch = "in_Delta";
        return inside();
    }
    if (t > 1.0 + guard) {
        if (branch) *branch = "outside_Delta";
        return outside;
    }
    if (branch) *branch = "Delta_boundary";
    return p < 1.0 ? std::max(outside, inside()) : outside;
}

}  // namespace detail

/// |Φ_1(F,λ)| bound for F ∈ A_{φ,ψ_δ} with φ univalent starlike.
inline BoundReport bound_fs_star(double delta, Complex lambda) {
    if (!(delta >= 0.0 && delta < 1.0)) throw DomainError(errc::bad_parameter, "δ must lie in [0, 1)");
    BoundReport r;
    const double k = detail::kappa(delta, lambda, &r.branch);
    r.value = std::max(1.0, std::abs(4.0 * lambda - 3.0)) + 2.0 * (1.0 - delta) * k;
    return r;
}

/// |Φ_1(F,λ)| bound for F ∈ A_{φ,ψ_0} with φ univalent convex.
inline BoundReport bound_fs_convex(Complex lambda) {
    BoundReport r;
    const double a = std::abs(lambda - 1.0);
    const double q = std::abs(1.0 - 2.0 * lambda);
    if (std::abs(lambda - 0.5) < 1.0 / 3.0) {
        r.branch = "near_half";
        r.value = a + 2.0 + q * q / (2.0 * (1.0 - q));
    } else {
        r.branch = "far_from_half";
        r.value = a + 4.0 * q;
    }
    return r;
}

/// |Φ_1(f,λ)| bound for f with z f' ∈ A_{φ,ψ_δ}, φ starlike (close-to-convex class K_δ).
inline BoundReport bound_fs_close_to_convex(double delta, Complex lambda) {
    if (!(delta >= 0.0 && delta < 1.0)) throw DomainError(errc::bad_parameter, "δ must lie in [0, 1)");
    BoundReport r;
    const double k = detail::kappa(delta, 0.75 * lambda, &r.branch);
    r.value = std::max(1.0 / 3.0, std::abs(1.0 - lambda)) + 2.0 * (1.0 - delta) / 3.0 * k;
    return r;
}

// ---------------------------------------------------------------------------
// Fekete–Szegő bounds, φ = identity

namespace detail {

inline void require_identity_phi(const FamilySpec& spec) {
    if (!spec.phi_is_identity()) throw DomainError(errc::not_identity_phi, "bound requires φ(z) = z");
}

/// Relative tie test for the two addends of the Φ_1 bound.
inline bool nearly_equal(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::max(x, y)); }

}  // namespace detail

/// γ_2 aligning the two addends of Φ_1(F,λ) = (β_0β_2 - λβ_1²)γ_1² + β_0β_1γ_2(1-|γ_1|²).
/// Requires β_1 != 0, β_0β_2 != λβ_1² and γ_1 != 0.
inline Complex aligned_gamma2(const FamilySpec& spec, Complex lambda, Complex gamma1) {
    const Complex t = spec.beta(0) * spec.beta(2) - lambda * spec.beta(1) * spec.beta(1);
    const Complex p = spec.beta(0) * spec.beta(1);
    const Complex tg = t * gamma1 * gamma1;
    if (p == Complex(0.0) || tg == Complex(0.0)) {
        throw DomainError(errc::bad_parameter, "aligned γ_2 is undefined when an addend vanishes");
    }
    return tg * std::abs(p) / (p * std::abs(tg));
}

/// |Φ_1(F,λ)| <= max(|β_0β_1|, |β_0β_2 - λβ_1²|) over A_{Id,ψ}; sharp.
///
/// The extremal ω: β_1 = 0 gives a rotation; β_0β_2 = λβ_1² gives e^{iθ}z². Otherwise the
/// two addends align for every γ_1 with γ_2 = aligned_gamma2, and |Φ_1| = |T|x + |β_0β_1|(1-x)
/// with x = |γ_1|², so the maximum sits at x = 1 (rotation) when |T| > |β_0β_1|, at x = 0
/// (e^{iθ}z²) when |T| < |β_0β_1|, and along the whole degree-2 family on a tie.
inline BoundReport bound_phi1_id(const FamilySpec& spec, Complex lambda) {
    detail::require_identity_phi(spec);
    const Complex beta0 = spec.beta(0), beta1 = spec.beta(1), beta2 = spec.beta(2);
    const Complex t = beta0 * beta2 - lambda * beta1 * beta1;
    const double p = std::abs(beta0 * beta1);
    BoundReport r;
    r.value = std::max(p, std::abs(t));
    r.sharp = true;
    if (beta1 == Complex(0.0)) {
        r.branch = "beta1_zero";
        r.witness = Rotation{0.0};
    } else if (std::abs(t) <= 1e-14 * std::max(1.0, p)) {
        r.branch = "balanced";
        r.witness = SquaredRotation{0.0};
    } else if (detail::nearly_equal(std::abs(t), p)) {
        r.branch = "aligned_degree2";
        const Complex gamma1 = 0.5;
        r.witness = Degree2{gamma1, std::arg(aligned_gamma2(spec, lambda, gamma1))};
    } else if (std::abs(t) > p) {
        r.branch = "aligned_rotation";
        r.witness = Rotation{0.0};
    } else {
        r.branch = "aligned_squared_rotation";
        r.witness = SquaredRotation{0.0};
    }
    return r;
}

/// |Φ_2(F,λ)| bound over A_{Id,ψ}: max{A+2B+C, B+C, C} with C = |β_1|² max(1,|λ|),
/// 2B = 2|(1-λ)β_1β_2| - C and A = |Φ_1(ψ,λ)| - 2|(1-λ)β_1β_2|.
///
/// No special case for β_1 = β_2 = β_3: the tighter |β|² max(|λ|, |1-λ|, 1) is
/// exceeded near λ = 1/3 ± i.
inline BoundReport bound_phi2_id(const FamilySpec& spec, Complex lambda) {
    detail::require_identity_phi(spec);
    const Complex beta1 = spec.beta(1), beta2 = spec.beta(2);
    BoundReport r;
    const double c = std::norm(beta1) * std::max(1.0, std::abs(lambda));
    const double mid = std::abs((1.0 - lambda) * beta1 * beta2);
    const double a = std::abs(fekete_szego(spec.psi(), 1, lambda)) - 2.0 * mid;
    const double b = mid - 0.5 * c;
    const double e1 = a + 2.0 * b + c, e2 = b + c;
    r.value = std::max({e1, e2, c});
    r.branch = r.value == e1 ? "psi_term" : (r.value == e2 ? "mixed_term" : "C_term");
    return r;
}

enum class InverseFunctional { phi1, phi2, phi2_composite };

/// Bounds for Φ_1(G,λ), Φ_2(G,λ) over B_{Id,ψ}.
///
/// phi1: |β_0|^{-6} max(|β_0β_1|, |Φ_0(ψ, 2-λ)|), sharp with the Φ_1(F, 2-λ) extremals.
/// phi2: |β_1²/β_0⁸| max{C, D, E}; falls back to phi2_composite when β_1 = 0.
/// phi2_composite: |β_0|^{-8} · bound_phi2_id + |4λ-5||β_1|²|β_0|^{-10} max(|β_0β_1|, |Φ_0(ψ,1)|).
inline BoundReport bound_phi_inverse(const FamilySpec& spec, InverseFunctional which, Complex lambda) {
    detail::require_identity_phi(spec);
    const Complex beta0 = spec.beta(0), beta1 = spec.beta(1), beta2 = spec.beta(2);
    const double m0 = std::abs(beta0);
    if (which == InverseFunctional::phi1) {
        BoundReport r = bound_phi1_id(spec, 2.0 - lambda);
        r.value /= std::pow(m0, 6);
        return r;
    }
    if (which == InverseFunctional::phi2 && beta1 != Complex(0.0)) {
        const Complex beta3 = spec.beta(3);
        const double c = std::max(1.0, std::abs(lambda));
        const Complex phi1_psi = beta1 * beta3 - lambda * beta2 * beta2;
        const Complex phi0_psi = beta0 * beta2 - beta1 * beta1;
        const double d = std::abs(phi1_psi / (beta1 * beta1) + (4.0 * lambda - 5.0) * phi0_psi / (beta0 * beta0));
        const double e = 0.5 * std::abs(4.0 * lambda - 5.0) * std::abs(beta1 / beta0) +
                         std::abs(1.0 - lambda) * std::abs(beta2 / beta1) + 0.5 * c;
        BoundReport r;
        const double top = std::max({c, d, e});
        r.value = std::norm(beta1) / std::pow(m0, 8) * top;
        r.branch = top == d ? "D" : (top == e ? "E" : "C");
        return r;
    }
    const BoundReport f2 = bound_phi2_id(spec, lambda);
    const double phi1_one = std::max(std::abs(beta0 * beta1), std::abs(beta0 * beta2 - beta1 * beta1));
    BoundReport r;
    r.value = f2.value / std::pow(m0, 8) + std::abs(4.0 * lambda - 5.0) * std::norm(beta1) / std::pow(m0, 10) * phi1_one;
    r.branch = which == InverseFunctional::phi2 ? "composite_beta1_zero" : "composite";
    return r;
}

/// Upper bound on |b_3| over the whole class: max over |γ_1| = r of |c(γ_1)| + ρ(γ_1),
/// bounded through the triangle inequality and maximized in r with quad_max. Exact when φ = z.
inline double b3_modulus_bound(const FamilySpec& spec) {
    const double b = std::abs(spec.b());
    const double b4 = std::pow(b, 4), b5 = b4 * b;
    const Complex a1 = spec.alpha(1), a2 = spec.alpha(2);
    const Complex beta0 = spec.beta(0), beta1 = spec.beta(1), beta2 = spec.beta(2);
    if (beta1 == Complex(0.0)) {
        return b5 * std::abs(beta0 * beta0 * spec.alpha_tilde()) + b4 * std::abs(a1 * beta2);
    }
    const double rho = b4 * std::abs(a1 * beta1);
    const double c0 = b5 * std::abs(beta0 * beta0 * spec.alpha_tilde());
    const double c1 = 3.0 * b5 * std::abs(a1 * a2 * beta0 * beta1);
    const double c2 = b5 * std::abs(a1 * a1 * spec.beta_tilde());
    // c0 + c1 r + c2 r² + rho (1 - r²) over r ∈ [0,1]
    return quad_max(c2 - rho, 0.5 * c1, c0 + rho);
}

}  // namespace coeffbody
