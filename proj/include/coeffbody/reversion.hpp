#pragma once

// Composition through Faà di Bruno's formula and series reversion, both
// expressed with ordinary Bell polynomials.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include "coeffbody/bell.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

/// h∘g with c_0 = h_0 and c_n = Σ_{k=1}^{n} h_k B°_{n,k}(g_1, ..., g_{n-k+1}).
inline TruncatedSeries compose_faa_di_bruno(const TruncatedSeries& h, const TruncatedSeries& g) {
    require_vanishing_at_origin(g, "inner series of a composition");
    const std::size_t n = std::min(h.order(), g.order());
    const auto a = g.coeffs().subspan(1);
    std::vector<Complex> c(n + 1);
    c[0] = h[0];
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (h[k] == Complex(0.0)) continue;
            acc += h[k] * bell_partial(m, k, a);
        }
        c[m] = acc;
    }
    return TruncatedSeries(std::move(c));
}

/// Compositional inverse G of f (G∘f = z to the order of f).
///
/// b_1 = 1/a_1 and, for n >= 2, b_n = -b_1^n Σ_{k=1}^{n-1} b_k B°_{n,k}(a_1, ..., a_{n-k+1}),
/// which is the coefficient of z^n in G∘f = z solved for b_n. The recursion runs in
/// long double: with |a_1| < 1 the b_n grow like |a_1|^{1-2n} and the terms cancel.
inline TruncatedSeries invert(const TruncatedSeries& f) {
    require_vanishing_at_origin(f, "series to invert");
    if (f.order() < 1) throw DomainError(errc::short_input, "inversion needs a jet of order >= 1");
    if (f[1] == Complex(0.0)) {
        throw DomainError(errc::not_invertible, "f'(0) = 0, f is not locally invertible at the origin");
    }
    const std::size_t n = f.order();
    using W = detail::WideComplex;
    std::vector<W> a(n), w(n + 1, W(0.0L));
    for (std::size_t i = 1; i <= n; ++i) a[i - 1] = W(f[i]);
    const W b = W(1.0L) / a[0];
    w[1] = b;
    W b_pow = b;
    for (std::size_t m = 2; m <= n; ++m) {
        b_pow *= b;
        W acc = 0.0L;
        for (std::size_t k = 1; k < m; ++k) acc += w[k] * detail::bell_partial_wide(m, k, a);
        w[m] = -b_pow * acc;
    }
    std::vector<Complex> g(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g[i] = Complex(w[i]);
    return TruncatedSeries(std::move(g));
}

}  // namespace coeffbody
