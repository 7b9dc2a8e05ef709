#pragma once

// Truncated complex power series (jets) c_0 + c_1 z + ... + c_N z^N.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coeffbody/error.hpp"

namespace coeffbody {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

class TruncatedSeries {
public:
    /// Zero jet of order 0.
    TruncatedSeries() : coeffs_(1) {}

    explicit TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw DomainError(errc::short_input, "a series needs at least c_0");
        }
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!is_finite(coeffs_[k])) {
                throw DomainError(errc::non_finite, "coefficient " + std::to_string(k) + " is not finite");
            }
        }
    }

    TruncatedSeries(std::initializer_list<Complex> coeffs)
        : TruncatedSeries(std::vector<Complex>(coeffs)) {}

    static TruncatedSeries zero(std::size_t order) {
        return TruncatedSeries(std::vector<Complex>(order + 1));
    }

    static TruncatedSeries constant(Complex c, std::size_t order) {
        std::vector<Complex> v(order + 1);
        v[0] = c;
        return TruncatedSeries(std::move(v));
    }

    /// The jet of z itself. Order must be at least 1.
    static TruncatedSeries identity(std::size_t order) { return monomial(1, 1.0, order); }

    static TruncatedSeries monomial(std::size_t degree, Complex c, std::size_t order) {
        std::vector<Complex> v(order + 1);
        if (degree <= order) v[degree] = c;
        return TruncatedSeries(std::move(v));
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Unchecked access.
    Complex operator[](std::size_t k) const noexcept { return coeffs_[k]; }

    /// Checked access; coefficients past the order are unknown, not zero.
    Complex at(std::size_t k) const {
        if (k > order()) {
            throw DomainError(errc::short_input, "coefficient " + std::to_string(k) +
                                                     " requested from a jet of order " +
                                                     std::to_string(order()));
        }
        return coeffs_[k];
    }

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    TruncatedSeries truncated(std::size_t order) const {
        std::vector<Complex> v(coeffs_.begin(),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        v.resize(order + 1);
        return TruncatedSeries(std::move(v));
    }

    /// Horner evaluation of the polynomial part.
    Complex evaluate(Complex z) const noexcept {
        Complex acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Complex> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f[k] + g[k];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Complex> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = f[k] - g[k];
    return TruncatedSeries(std::move(v));
}

inline TruncatedSeries operator*(Complex s, const TruncatedSeries& f) {
    std::vector<Complex> v(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : v) c *= s;
    return TruncatedSeries(std::move(v));
}

/// Cauchy product truncated to the shorter order.
inline TruncatedSeries multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Complex> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i <= k; ++i) acc += f[i] * g[k - i];
        v[k] = acc;
    }
    return TruncatedSeries(std::move(v));
}

/// Multiplicative inverse 1/f; requires f_0 != 0.
inline TruncatedSeries reciprocal(const TruncatedSeries& f) {
    if (f[0] == Complex(0.0)) {
        throw DomainError(errc::not_invertible, "reciprocal of a series with f_0 = 0");
    }
    const std::size_t n = f.order();
    std::vector<Complex> v(n + 1);
    v[0] = 1.0 / f[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 1; i <= k; ++i) acc += f[i] * v[k - i];
        v[k] = -acc * v[0];
    }
    return TruncatedSeries(std::move(v));
}

/// f / z for a series with f_0 = 0; the order drops by one.
inline TruncatedSeries divide_by_z(const TruncatedSeries& f) {
    if (f[0] != Complex(0.0)) {
        throw DomainError(errc::nonzero_constant, "cannot divide by z when f_0 != 0");
    }
    if (f.order() == 0) return TruncatedSeries::zero(0);
    return TruncatedSeries(std::vector<Complex>(f.coeffs().begin() + 1, f.coeffs().end()));
}

inline void require_vanishing_at_origin(const TruncatedSeries& g, const char* what) {
    if (g[0] != Complex(0.0)) {
        throw DomainError(errc::nonzero_constant, std::string(what) + " must vanish at the origin");
    }
}

/// h∘g by Horner substitution, h_0 + g(h_1 + g(h_2 + ...)). Requires g_0 = 0.
inline TruncatedSeries compose(const TruncatedSeries& h, const TruncatedSeries& g) {
    require_vanishing_at_origin(g, "inner series of a composition");
    const std::size_t n = std::min(h.order(), g.order());
    std::vector<Complex> acc(n + 1), next(n + 1);
    acc[0] = h[n];
    for (std::size_t j = n; j-- > 0;) {
        // next = acc * g + h_j, truncated to order n. g_0 = 0 keeps this triangular.
        std::fill(next.begin(), next.end(), Complex(0.0));
        for (std::size_t k = 1; k <= n; ++k) {
            Complex s = 0.0;
            for (std::size_t i = 1; i <= k; ++i) s += g[i] * acc[k - i];
            next[k] = s;
        }
        next[0] = h[j];
        std::swap(acc, next);
    }
    return TruncatedSeries(std::move(acc));
}

}  // namespace coeffbody
