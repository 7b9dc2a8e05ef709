#pragma once

// Classes A_{φ,ψ} = {F = φ · (ψ∘ω) : ω ∈ Ω} and their inverses B_{φ,ψ}.
//
// With φ = Σ α_k z^k (α_0 = 0), ψ = Σ β_k z^k and ω = Σ c_k z^k,
//
//   a_1 = α_1 β_0,
//   a_p = α_p β_0 + Σ_{m=1}^{p-1} Σ_{k=1}^{m} α_{p-m} β_k B°_{m,k}(c_1..c_{m-k+1}),  p >= 2,
//
// and the inverse coefficients follow by reversion. The coefficient-body maps
// S (c -> a), K (c -> b) and Φ = K∘F (γ -> b) are exposed coordinate-wise.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coeffbody/bell.hpp"
#include "coeffbody/error.hpp"
#include "coeffbody/reversion.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

/// Which known-good function a jet came from. Bounds that only hold for
/// starlike or convex φ dispatch on this tag.
enum class PhiKind { identity, koebe, convex, custom };
enum class PsiKind { psi_delta, koebe_squared_quotient, ex58, custom };

class FamilySpec {
public:
    FamilySpec(TruncatedSeries phi, TruncatedSeries psi, PhiKind phi_kind = PhiKind::custom,
               PsiKind psi_kind = PsiKind::custom, double delta = 0.0)
        : phi_(std::move(phi)), psi_(std::move(psi)), phi_kind_(phi_kind), psi_kind_(psi_kind), delta_(delta) {
        if (phi_.order() < 1) throw DomainError(errc::short_input, "φ needs a jet of order >= 1");
        if (phi_[0] != Complex(0.0)) throw DomainError(errc::nonzero_constant, "φ(0) must be 0");
        if (phi_[1] == Complex(0.0)) throw DomainError(errc::not_invertible, "φ'(0) must be nonzero");
        if (psi_[0] == Complex(0.0)) throw DomainError(errc::not_invertible, "ψ(0) must be nonzero");
        b_ = 1.0 / (phi_[1] * psi_[0]);
    }

    const TruncatedSeries& phi() const noexcept { return phi_; }
    const TruncatedSeries& psi() const noexcept { return psi_; }
    PhiKind phi_kind() const noexcept { return phi_kind_; }
    PsiKind psi_kind() const noexcept { return psi_kind_; }
    /// δ of the ψ_δ preset; 0 otherwise.
    double delta() const noexcept { return delta_; }

    /// b = 1/(α_1 β_0), the leading coefficient of every inverse function.
    Complex b() const noexcept { return b_; }

    /// α_k and β_k; throws past the stored order.
    Complex alpha(std::size_t k) const { return phi_.at(k); }
    Complex beta(std::size_t k) const { return psi_.at(k); }

    /// 2α_2² - α_1α_3 = -Φ_1(φ, 2).
    Complex alpha_tilde() const { return 2.0 * alpha(2) * alpha(2) - alpha(1) * alpha(3); }
    /// 2β_1² - β_0β_2 = -Φ_0(ψ, 2).
    Complex beta_tilde() const { return 2.0 * beta(1) * beta(1) - beta(0) * beta(2); }

    /// φ(z) = z exactly, up to the stored order.
    bool phi_is_identity() const {
        if (phi_[1] != Complex(1.0)) return false;
        for (std::size_t k = 2; k <= phi_.order(); ++k) {
            if (phi_[k] != Complex(0.0)) return false;
        }
        return true;
    }

    std::size_t order() const noexcept { return std::min(phi_.order(), psi_.order()); }

private:
    TruncatedSeries phi_;
    TruncatedSeries psi_;
    PhiKind phi_kind_;
    PsiKind psi_kind_;
    double delta_;
    Complex b_;
};

// ---------------------------------------------------------------------------
// Presets

inline constexpr std::size_t kDefaultPresetOrder = 15;

struct PresetParams {
    double delta = 0.0;   // ψ_δ
    Complex beta0 = 1.0;  // ex58
    Complex beta = 1.0;   // ex58
    std::size_t order = kDefaultPresetOrder;
};

inline TruncatedSeries phi_preset(PhiKind kind, std::size_t order) {
    std::vector<Complex> v(order + 1, 0.0);
    switch (kind) {
        case PhiKind::identity:
            v[1] = 1.0;
            break;
        case PhiKind::koebe:  // z/(1-z)²
            for (std::size_t k = 1; k <= order; ++k) v[k] = static_cast<double>(k);
            break;
        case PhiKind::convex:  // z/(1-z)
            for (std::size_t k = 1; k <= order; ++k) v[k] = 1.0;
            break;
        case PhiKind::custom:
            throw DomainError(errc::unknown_preset, "custom φ has no preset jet");
    }
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries psi_preset(PsiKind kind, const PresetParams& p) {
    std::vector<Complex> v(p.order + 1, 0.0);
    switch (kind) {
        case PsiKind::psi_delta:  // (1-δ)(1+z)/(1-z) + δ
            if (!(p.delta >= 0.0 && p.delta < 1.0)) {
                throw DomainError(errc::bad_parameter, "ψ_δ needs δ in [0, 1)");
            }
            v[0] = 1.0;
            for (std::size_t k = 1; k <= p.order; ++k) v[k] = 2.0 * (1.0 - p.delta);
            break;
        case PsiKind::koebe_squared_quotient:  // ((1+z)/(1-z))² = 1 + Σ 4n z^n
            v[0] = 1.0;
            for (std::size_t k = 1; k <= p.order; ++k) v[k] = 4.0 * static_cast<double>(k);
            break;
        case PsiKind::ex58:  // β_0 + β(z + z² + z³), zero tail
            if (p.beta == Complex(0.0)) throw DomainError(errc::bad_parameter, "ex58 needs β != 0");
            v[0] = p.beta0;
            for (std::size_t k = 1; k <= std::min<std::size_t>(3, p.order); ++k) v[k] = p.beta;
            break;
        case PsiKind::custom:
            throw DomainError(errc::unknown_preset, "custom ψ has no preset jet");
    }
    return TruncatedSeries(std::move(v));
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"identity", "koebe", "convex",
                                                "psi_delta", "koebe_squared_quotient", "ex58"};
    return names;
}

/// Named (φ, ψ) pairs. φ-named presets pair with ψ_δ; ψ-named presets pair with φ = z.
inline FamilySpec make_preset(std::string_view name, const PresetParams& p = {}) {
    auto pair = [&](PhiKind phi, PsiKind psi) {
        return FamilySpec(phi_preset(phi, p.order), psi_preset(psi, p), phi, psi,
                          psi == PsiKind::psi_delta ? p.delta : 0.0);
    };
    if (name == "identity") return pair(PhiKind::identity, PsiKind::psi_delta);
    if (name == "koebe") return pair(PhiKind::koebe, PsiKind::psi_delta);
    if (name == "convex") return pair(PhiKind::convex, PsiKind::psi_delta);
    if (name == "psi_delta") return pair(PhiKind::identity, PsiKind::psi_delta);
    if (name == "koebe_squared_quotient") return pair(PhiKind::identity, PsiKind::koebe_squared_quotient);
    if (name == "ex58") return pair(PhiKind::identity, PsiKind::ex58);
    throw DomainError(errc::unknown_preset, "unknown preset '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Coefficients

namespace detail {

inline void check_family_orders(const FamilySpec& spec, const TruncatedSeries& omega, std::size_t n) {
    if (n < 1) throw DomainError(errc::bad_index, "coefficient order n must be >= 1");
    require_vanishing_at_origin(omega, "omega");
    if (spec.phi().order() < n) throw DomainError(errc::short_input, "φ jet shorter than requested order");
    if (n >= 2 && (spec.psi().order() < n - 1 || omega.order() < n - 1)) {
        throw DomainError(errc::short_input, "ψ and ω jets need order >= n-1");
    }
}

}  // namespace detail

/// Jet of F = φ·(ψ∘ω) to order n, computed coefficient-wise through Bell polynomials.
inline TruncatedSeries forward_coeffs(const FamilySpec& spec, const TruncatedSeries& omega, std::size_t n) {
    detail::check_family_orders(spec, omega, n);
    const auto& phi = spec.phi();
    const auto& psi = spec.psi();
    const auto c = omega.coeffs().subspan(1);
    // delta[m] = [z^m] ψ∘ω for m = 1..n-1
    std::vector<Complex> delta(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (psi[k] == Complex(0.0)) continue;
            acc += psi[k] * bell_partial(m, k, c);
        }
        delta[m] = acc;
    }
    std::vector<Complex> a(n + 1, 0.0);
    for (std::size_t p = 1; p <= n; ++p) {
        Complex acc = phi[p] * psi[0];
        for (std::size_t m = 1; m < p; ++m) acc += phi[p - m] * delta[m];
        a[p] = acc;
    }
    return TruncatedSeries(std::move(a));
}

/// Jet of G = F^{-1} to order n.
inline TruncatedSeries inverse_coeffs(const FamilySpec& spec, const TruncatedSeries& omega, std::size_t n) {
    return invert(forward_coeffs(spec, omega, n));
}

namespace detail {
inline TruncatedSeries omega_from_tail(std::span<const Complex> c) {
    std::vector<Complex> v(c.size() + 1, 0.0);
    std::copy(c.begin(), c.end(), v.begin() + 1);
    return TruncatedSeries(std::move(v));
}
}  // namespace detail

/// S: (c_1..c_{n-1}) -> (a_2..a_n).
inline std::vector<Complex> body_map_S(const FamilySpec& spec, std::span<const Complex> c) {
    if (c.empty()) throw DomainError(errc::short_input, "body maps need at least c_1");
    const std::size_t n = c.size() + 1;
    const auto a = forward_coeffs(spec, detail::omega_from_tail(c), n);
    return std::vector<Complex>(a.coeffs().begin() + 2, a.coeffs().end());
}

/// K = L∘S: (c_1..c_{n-1}) -> (b_2..b_n), with L realized by reversion.
inline std::vector<Complex> body_map_K(const FamilySpec& spec, std::span<const Complex> c) {
    if (c.empty()) throw DomainError(errc::short_input, "body maps need at least c_1");
    const std::size_t n = c.size() + 1;
    const auto g = inverse_coeffs(spec, detail::omega_from_tail(c), n);
    return std::vector<Complex>(g.coeffs().begin() + 2, g.coeffs().end());
}

/// Φ_n = K_n ∘ F_{n-1}: Schur parameters γ_1..γ_{n-1} -> (b_2..b_n).
inline std::vector<Complex> body_point(const FamilySpec& spec, const SchurSequence& gammas, std::size_t n) {
    if (n < 2) throw DomainError(errc::bad_index, "body_point needs n >= 2");
    const auto omega = schur_to_taylor(gammas, n - 1);
    return body_map_K(spec, omega.coeffs().subspan(1));
}

}  // namespace coeffbody
