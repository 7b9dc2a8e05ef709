#pragma once

// Schur parameters of holomorphic self-maps ω of the unit disk with ω(0) = 0.
//
// The Schur transform σω(z) = (ω(z) - ω(0)) / (z (1 - conj(ω(0)) ω(z))) is
// iterated, γ_n = (σ^n ω)(0). Conversely the Taylor coefficients follow from
// the parameters through the polynomial recursion
//
//   F_1(z_1) = z_1,
//   F_m(z_1..z_m) = (1 - |z_1|²) F_{m-1}(z_2..z_m)
//                   - conj(z_1) Σ_{k=2}^{m-1} F_{m-k}(z_2..z_{m-k+1}) F_k(z_1..z_k).

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coeffbody/error.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

/// |γ_k| >= 1 - kBlaschkeEps ends the sequence: ω is a Blaschke product of order k.
inline constexpr double kBlaschkeEps = 1e-10;

struct SchurSequence {
    std::vector<Complex> gammas;               // γ_1, ..., γ_m
    std::optional<std::size_t> terminated_at;  // 1-based k with |γ_k| = 1
    bool self_map = true;                      // false once some |γ_j| > 1 + ε was seen

    std::size_t size() const noexcept { return gammas.size(); }

    /// γ_j (1-based); parameters past a Blaschke termination are zero.
    Complex gamma(std::size_t j) const {
        if (j >= 1 && j <= gammas.size()) return gammas[j - 1];
        if (terminated_at && j > *terminated_at) return 0.0;
        throw DomainError(errc::short_input, "Schur parameter γ_" + std::to_string(j) + " is not available");
    }

    friend bool operator==(const SchurSequence&, const SchurSequence&) = default;
};

/// Taylor coefficients (c_1, ..., c_n) from (z_1, ..., z_n) via the F recursion.
inline std::vector<Complex> schur_polynomials(std::span<const Complex> z) {
    const std::size_t n = z.size();
    if (n == 0) return {};
    // tail[s][m] = F_m(z_s, ..., z_{s+m-1}) (0-based s), for s + m <= n.
    std::vector<std::vector<Complex>> tail(n, std::vector<Complex>(n + 1, 0.0));
    for (std::size_t s = n; s-- > 0;) {
        const std::size_t max_m = n - s;
        const Complex zs = z[s];
        const double w = 1.0 - std::norm(zs);
        tail[s][1] = zs;
        for (std::size_t m = 2; m <= max_m; ++m) {
            Complex acc = 0.0;
            for (std::size_t k = 2; k <= m - 1; ++k) acc += tail[s + 1][m - k] * tail[s][k];
            tail[s][m] = w * tail[s + 1][m - 1] - std::conj(zs) * acc;
        }
    }
    return std::vector<Complex>(tail[0].begin() + 1, tail[0].end());
}

/// ω jet of order n with c_0 = 0 and (c_1..c_n) = F_n(γ_1..γ_n).
inline TruncatedSeries schur_to_taylor(const SchurSequence& seq, std::size_t n) {
    if (n < 1) throw DomainError(errc::bad_index, "schur_to_taylor needs n >= 1");
    std::vector<Complex> z(n);
    for (std::size_t j = 1; j <= n; ++j) z[j - 1] = seq.gamma(j);
    const auto c = schur_polynomials(z);
    std::vector<Complex> v(n + 1, 0.0);
    std::copy(c.begin(), c.end(), v.begin() + 1);
    return TruncatedSeries(std::move(v));
}

/// Iterates σ on the jet; a jet of order N yields at most N parameters.
inline SchurSequence taylor_to_schur(const TruncatedSeries& omega) {
    require_vanishing_at_origin(omega, "omega");
    SchurSequence seq;
    if (omega.order() == 0) return seq;
    TruncatedSeries current = divide_by_z(omega);  // σω, since ω(0) = 0
    for (;;) {
        const Complex g = current[0];
        seq.gammas.push_back(g);
        const double r = std::abs(g);
        if (r > 1.0 + kBlaschkeEps) {
            seq.self_map = false;
            break;
        }
        if (r >= 1.0 - kBlaschkeEps) {
            seq.terminated_at = seq.gammas.size();
            break;
        }
        if (current.order() == 0) break;
        // σ(current) = (current - g) / (z (1 - conj(g) current))
        std::vector<Complex> num(current.coeffs().begin(), current.coeffs().end());
        num[0] = 0.0;
        const TruncatedSeries shifted = divide_by_z(TruncatedSeries(std::move(num)));
        const TruncatedSeries denom =
            TruncatedSeries::constant(1.0, current.order()) - std::conj(g) * current;
        current = multiply(shifted, reciprocal(denom));
    }
    return seq;
}

/// splitmix64 finalizer; mixes a sweep seed with a sample index.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace detail {
inline double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}
}  // namespace detail

/// n parameters drawn area-uniformly from the disk of radius radius_cap.
inline SchurSequence sample_schur(std::size_t n, double radius_cap, std::uint64_t seed) {
    if (n < 1) throw DomainError(errc::bad_index, "sample_schur needs n >= 1");
    if (!(radius_cap > 0.0 && radius_cap <= 1.0)) {
        throw DomainError(errc::bad_parameter, "radius_cap must lie in (0, 1]");
    }
    std::mt19937_64 rng(seed);
    SchurSequence seq;
    seq.gammas.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = radius_cap * std::sqrt(detail::unit_uniform(rng));
        const double t = 2.0 * std::numbers::pi * detail::unit_uniform(rng);
        seq.gammas.emplace_back(r * std::cos(t), r * std::sin(t));
    }
    return seq;
}

struct Rotation {
    double theta = 0.0;
};
struct SquaredRotation {
    double theta = 0.0;
};
struct Degree2 {
    Complex gamma1 = 0.0;
    double theta = 0.0;
};

/// Finite Blaschke products e^{iθ}z, e^{iθ}z², z(γ_1 + z e^{iθ})/(1 + conj(γ_1) z e^{iθ}).
using BlaschkeWitness = std::variant<Rotation, SquaredRotation, Degree2>;

inline std::string witness_kind_name(const BlaschkeWitness& w) {
    switch (w.index()) {
        case 0: return "rotation";
        case 1: return "squared_rotation";
        default: return "degree2";
    }
}

inline TruncatedSeries blaschke_witness(const BlaschkeWitness& kind, std::size_t order) {
    if (order < 1) throw DomainError(errc::bad_index, "witness jets need order >= 1");
    std::vector<Complex> v(order + 1, 0.0);
    if (const auto* r = std::get_if<Rotation>(&kind)) {
        v[1] = std::polar(1.0, r->theta);
    } else if (const auto* s = std::get_if<SquaredRotation>(&kind)) {
        if (order >= 2) v[2] = std::polar(1.0, s->theta);
    } else {
        const auto& d = std::get<Degree2>(kind);
        if (!(std::abs(d.gamma1) < 1.0)) {
            throw DomainError(errc::outside_disk, "degree-2 witness needs |γ_1| < 1");
        }
        // z (γ + u z) / (1 + conj(γ) u z) with u = e^{iθ}:
        // c_1 = γ, c_{m} = (1 - |γ|²) u (-conj(γ) u)^{m-2} for m >= 2.
        const Complex u = std::polar(1.0, d.theta);
        const Complex q = -std::conj(d.gamma1) * u;
        v[1] = d.gamma1;
        Complex term = (1.0 - std::norm(d.gamma1)) * u;
        for (std::size_t m = 2; m <= order; ++m) {
            v[m] = term;
            term *= q;
        }
    }
    return TruncatedSeries(std::move(v));
}

}  // namespace coeffbody
