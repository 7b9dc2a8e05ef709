#pragma once

// Ordinary Bell polynomials
//
//   B°_{n,k}(x_1, ..., x_{n-k+1}) = k! Σ_{j ∈ I(n,k)} Π_i x_i^{j_i} / j_i!
//
// where I(n,k) holds the multi-indices with Σ i·j_i = n and Σ j_i = k. The
// coefficient of z^n in (x_1 z + x_2 z^2 + ...)^k is exactly B°_{n,k}(x).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coeffbody/error.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

struct MultiIndexSet {
    std::size_t n = 0;
    std::size_t k = 0;
    /// Each tuple has n - k + 1 entries (j_1, ..., j_{n-k+1}).
    std::vector<std::vector<unsigned>> indices;
};

namespace detail {

inline void enumerate_multi_indices(std::size_t pos, std::size_t len, std::size_t weight_left,
                                    std::size_t count_left, std::vector<unsigned>& current,
                                    std::vector<std::vector<unsigned>>& out) {
    if (pos > len) {
        if (weight_left == 0 && count_left == 0) out.push_back(current);
        return;
    }
    // Every remaining part has size in [pos, len].
    if (count_left * pos > weight_left || count_left * len < weight_left) return;
    for (std::size_t j = 0; j <= count_left && j * pos <= weight_left; ++j) {
        current[pos - 1] = static_cast<unsigned>(j);
        enumerate_multi_indices(pos + 1, len, weight_left - j * pos, count_left - j, current, out);
    }
    current[pos - 1] = 0;
}

inline MultiIndexSet build_multi_index_set(std::size_t n, std::size_t k) {
    MultiIndexSet set{n, k, {}};
    const std::size_t len = n - k + 1;
    std::vector<unsigned> current(len, 0);
    enumerate_multi_indices(1, len, n, k, current, set.indices);
    return set;
}

/// One monomial of B°_{n,k}: coefficient · Π x_{index}^{power}.
struct BellTerm {
    double coefficient = 0.0;
    std::vector<std::pair<unsigned, unsigned>> factors;  // (index i >= 1, power j_i > 0)
};

inline std::vector<BellTerm> build_bell_terms(std::size_t n, std::size_t k) {
    const MultiIndexSet set = build_multi_index_set(n, k);
    std::vector<BellTerm> terms;
    terms.reserve(set.indices.size());
    const double k_fact = std::tgamma(static_cast<double>(k) + 1.0);
    for (const auto& j : set.indices) {
        BellTerm term;
        double denom = 1.0;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (j[i] == 0) continue;
            denom *= std::tgamma(static_cast<double>(j[i]) + 1.0);
            term.factors.emplace_back(static_cast<unsigned>(i + 1), j[i]);
        }
        term.coefficient = std::round(k_fact / denom);  // multinomial, an exact integer
        terms.push_back(std::move(term));
    }
    return terms;
}

inline constexpr std::size_t kBellMemoMax = 16;

struct BellMemo {
    // terms[n][k] for 1 <= k <= n <= kBellMemoMax.
    std::array<std::array<std::vector<BellTerm>, kBellMemoMax + 1>, kBellMemoMax + 1> terms;
    std::array<std::array<MultiIndexSet, kBellMemoMax + 1>, kBellMemoMax + 1> sets;

    BellMemo() {
        for (std::size_t n = 1; n <= kBellMemoMax; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                sets[n][k] = build_multi_index_set(n, k);
                terms[n][k] = build_bell_terms(n, k);
            }
        }
    }
};

// Initialized once on first use; read-only afterwards.
inline const BellMemo& bell_memo() {
    static const BellMemo memo;
    return memo;
}

template <class T>
T ipow(T x, unsigned p) {
    T r = 1.0;
    while (p != 0) {
        if (p & 1U) r *= x;
        x *= x;
        p >>= 1U;
    }
    return r;
}

template <class T>
T eval_terms(const std::vector<BellTerm>& terms, std::span<const T> x) {
    T total = 0.0;
    for (const auto& term : terms) {
        T prod(term.coefficient);
        for (const auto& [i, p] : term.factors) prod *= ipow(x[i - 1], p);
        total += prod;
    }
    return total;
}

inline void check_nk(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError(errc::bad_index, "Bell index needs 1 <= k <= n, got n=" + std::to_string(n) +
                                               ", k=" + std::to_string(k));
    }
}

}  // namespace detail

/// All multi-indices of I(n,k). Memoized for n <= 16.
inline MultiIndexSet multi_index_set(std::size_t n, std::size_t k) {
    detail::check_nk(n, k);
    if (n <= detail::kBellMemoMax) return detail::bell_memo().sets[n][k];
    return detail::build_multi_index_set(n, k);
}

/// B°_{n,k}(x_1, ..., x_{n-k+1}). Only the first n-k+1 entries of x are read.
inline Complex bell_partial(std::size_t n, std::size_t k, std::span<const Complex> x) {
    detail::check_nk(n, k);
    if (x.size() < n - k + 1) {
        throw DomainError(errc::short_input, "B_{" + std::to_string(n) + "," + std::to_string(k) +
                                                 "} needs " + std::to_string(n - k + 1) + " arguments");
    }
    if (n <= detail::kBellMemoMax) return detail::eval_terms(detail::bell_memo().terms[n][k], x);
    return detail::eval_terms(detail::build_bell_terms(n, k), x);
}

namespace detail {

using WideComplex = std::complex<long double>;

/// bell_partial in extended precision; indices are checked by the caller.
inline WideComplex bell_partial_wide(std::size_t n, std::size_t k, std::span<const WideComplex> x) {
    if (n <= kBellMemoMax) return eval_terms(bell_memo().terms[n][k], x);
    return eval_terms(build_bell_terms(n, k), x);
}

}  // namespace detail

/// Complete ordinary Bell polynomial Σ_{k=1}^{p} B°_{p,k}(x).
inline Complex bell_complete(std::size_t p, std::span<const Complex> x) {
    if (p < 1) throw DomainError(errc::bad_index, "complete Bell polynomial needs p >= 1");
    if (x.size() < p) throw DomainError(errc::short_input, "complete Bell polynomial B_p needs p arguments");
    Complex total = 0.0;
    for (std::size_t k = 1; k <= p; ++k) total += bell_partial(p, k, x);
    return total;
}

namespace detail {

using DenseMatrix = std::vector<std::vector<Complex>>;

inline Complex laplace_det(const DenseMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Complex det = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == Complex(0.0)) continue;
        DenseMatrix minor(n - 1, std::vector<Complex>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c != col) minor[r - 1][mc++] = m[r][c];
            }
        }
        const Complex term = m[0][col] * laplace_det(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

inline Complex elimination_det(DenseMatrix m) {
    const std::size_t n = m.size();
    Complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        if (m[pivot][col] == Complex(0.0)) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = m[r][col] / m[col][col];
            if (f == Complex(0.0)) continue;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace detail

/// The p×p Hessenberg determinant with first column c_1..c_p, superdiagonal -1
/// and entries w·c_{row-col+1} on and below the diagonal of the other columns.
/// It equals Σ_k w^{k-1} B°_{p,k}(c).
inline Complex bell_weighted_det(std::size_t p, Complex w, std::span<const Complex> c) {
    if (p < 1) throw DomainError(errc::bad_index, "determinant size must be >= 1");
    if (c.size() < p) throw DomainError(errc::short_input, "determinant of size p needs c_1..c_p");
    detail::DenseMatrix m(p, std::vector<Complex>(p, 0.0));
    for (std::size_t i = 0; i < p; ++i) {
        m[i][0] = c[i];
        for (std::size_t j = 1; j < p; ++j) {
            if (j == i + 1) {
                m[i][j] = -1.0;
            } else if (j <= i) {
                m[i][j] = w * c[i - j];
            }
        }
    }
    return p <= 4 ? detail::laplace_det(m) : detail::elimination_det(std::move(m));
}

/// Jet of (1+ω)/(1-ω) = 1 + Σ_p 2 B°_p(c_1..c_p) z^p for ω with ω(0) = 0.
inline TruncatedSeries caratheodory_jet(const TruncatedSeries& omega) {
    require_vanishing_at_origin(omega, "omega");
    const std::size_t n = omega.order();
    std::vector<Complex> v(n + 1);
    v[0] = 1.0;
    const auto c = omega.coeffs().subspan(1);
    for (std::size_t p = 1; p <= n; ++p) v[p] = 2.0 * bell_complete(p, c);
    return TruncatedSeries(std::move(v));
}

}  // namespace coeffbody
