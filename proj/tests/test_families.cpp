#include <gtest/gtest.h>

#include "coeffbody/bounds.hpp"
#include "coeffbody/families.hpp"
#include "oracles.hpp"

using namespace coeffbody;

namespace {

oracle::Poly poly(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

FamilySpec random_family(std::mt19937_64& rng, std::size_t order) {
    auto phi = oracle::random_poly(rng, order, 1.0);
    auto psi = oracle::random_poly(rng, order, 1.0);
    phi[0] = 0.0;
    phi[1] += Complex(1.5, 0.0);
    psi[0] += Complex(1.5, 0.0);
    return FamilySpec(TruncatedSeries(phi), TruncatedSeries(psi));
}

}  // namespace

TEST(FamilySpec, ValidatesConditions) {
    EXPECT_THROW(FamilySpec({0.1, 1.0}, {1.0, 1.0}), DomainError);
    EXPECT_THROW(FamilySpec({0.0, 0.0, 1.0}, {1.0, 1.0}), DomainError);
    EXPECT_THROW(FamilySpec({0.0, 1.0}, {0.0, 1.0}), DomainError);
    const FamilySpec s({0.0, Complex(2, 1)}, {Complex(0.5, -1)});
    EXPECT_LE(std::abs(s.b() * Complex(2, 1) * Complex(0.5, -1) - 1.0), 1e-15);
}

TEST(Presets, CoefficientsAndNames) {
    const auto koebe = make_preset("koebe");
    EXPECT_EQ(koebe.alpha(3), Complex(3.0));
    EXPECT_EQ(koebe.beta(2), Complex(2.0));
    EXPECT_EQ(koebe.phi_kind(), PhiKind::koebe);
    const auto half = make_preset("psi_delta", {.delta = 0.25});
    EXPECT_EQ(half.beta(0), Complex(1.0));
    EXPECT_EQ(half.beta(7), Complex(1.5));
    const auto sq = make_preset("koebe_squared_quotient");
    for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(sq.beta(n), Complex(4.0 * static_cast<double>(n)));
    EXPECT_TRUE(sq.phi_is_identity());
    const auto ex = make_preset("ex58", {.beta0 = Complex(2, 0), .beta = Complex(0, 1)});
    EXPECT_EQ(ex.beta(3), Complex(0, 1));
    EXPECT_EQ(ex.beta(4), Complex(0.0));
    for (const auto& name : preset_names()) EXPECT_NO_THROW(make_preset(name));
    try {
        make_preset("cardioid");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "UnknownPreset");
    }
    EXPECT_THROW(make_preset("psi_delta", {.delta = 1.0}), DomainError);
}

TEST(ForwardCoeffs, MatchesSeriesProductOracle) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto spec = random_family(rng, 8);
        auto w = oracle::random_poly(rng, 8, 0.6);
        w[0] = 0.0;
        const auto f = forward_coeffs(spec, TruncatedSeries(w), 8);
        const auto want = oracle::mul(poly(spec.phi()), oracle::compose_by_powers(poly(spec.psi()), w, 8), 8);
        EXPECT_LE(oracle::max_abs_diff(poly(f), want), 1e-10);
    }
}

TEST(ForwardCoeffs, GeometricPsiGivesWeightedBellSums) {
    const Complex w(0.6, -0.3);
    std::vector<Complex> psi(7);
    for (std::size_t k = 0; k < psi.size(); ++k) psi[k] = std::pow(w, static_cast<int>(k));
    const FamilySpec spec(TruncatedSeries::identity(6), TruncatedSeries(psi));
    std::mt19937_64 rng(2);
    auto c = oracle::random_poly(rng, 6, 0.5);
    c[0] = 0.0;
    const auto f = forward_coeffs(spec, TruncatedSeries(c), 6);
    const oracle::Poly x(c.begin() + 1, c.end());
    for (std::size_t p = 1; p <= 5; ++p) {
        Complex want = 0.0;
        for (std::size_t k = 1; k <= p; ++k) want += std::pow(w, static_cast<int>(k)) * oracle::bell_by_powers(p, k, x);
        EXPECT_LE(std::abs(f[p + 1] - want), 1e-13);
    }
}

TEST(ForwardCoeffs, Examples) {
    const auto koebe = make_preset("koebe");
    const auto f0 = forward_coeffs(koebe, TruncatedSeries::zero(5), 5);
    EXPECT_EQ(f0, TruncatedSeries({0.0, 1.0, 2.0, 3.0, 4.0, 5.0}));
    const auto f = forward_coeffs(make_preset("psi_delta"), TruncatedSeries::identity(5), 5);
    EXPECT_EQ(f, TruncatedSeries({0.0, 1.0, 2.0, 2.0, 2.0, 2.0}));
    EXPECT_THROW(forward_coeffs(koebe, {0.5, 1.0, 0.0}, 2), DomainError);
    EXPECT_THROW(forward_coeffs(koebe, {0.0, 1.0}, 4), DomainError);
}

TEST(InverseCoeffs, LowOrderClosedForms) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto spec = random_family(rng, 4);
        const auto gam = sample_schur(2, 1.0, derive_seed(23, t));
        const Complex g1 = gam.gammas[0], g2 = gam.gammas[1];
        const auto g = inverse_coeffs(spec, schur_to_taylor(gam, 2), 3);
        const Complex b = spec.b();
        const Complex a1 = spec.alpha(1), a2 = spec.alpha(2);
        const Complex be0 = spec.beta(0), be1 = spec.beta(1);
        EXPECT_LE(std::abs(g[1] - b), 1e-14);
        EXPECT_LE(std::abs(g[2] + b * b * b * (a2 * be0 + a1 * be1 * g1)), 1e-12);
        const Complex b3 = std::pow(b, 5) * (be0 * be0 * spec.alpha_tilde() +
                                             a1 * be1 * (3.0 * a2 * be0 * g1 - a1 * be0 * g2 * (1.0 - std::norm(g1))) +
                                             a1 * a1 * g1 * g1 * spec.beta_tilde());
        EXPECT_LE(std::abs(g[3] - b3), 1e-11);
    }
    const FamilySpec trivial(TruncatedSeries::identity(4), TruncatedSeries::constant(1.0, 4));
    EXPECT_EQ(inverse_coeffs(trivial, schur_to_taylor(sample_schur(3, 1.0, 1), 3), 4), TruncatedSeries::identity(4));
}

TEST(BodyMaps, SExamplesAndTriangularity) {
    const auto spec = make_preset("koebe", {.delta = 0.3});
    const Complex c1(0.2, 0.7);
    const auto s2 = body_map_S(spec, std::vector<Complex>{c1});
    EXPECT_LE(std::abs(s2[0] - (spec.alpha(2) * spec.beta(0) + spec.alpha(1) * spec.beta(1) * c1)), 1e-14);
    const auto zero = body_map_S(spec, std::vector<Complex>(4, 0.0));
    for (std::size_t p = 2; p <= 5; ++p) EXPECT_EQ(zero[p - 2], spec.alpha(p) * spec.beta(0));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto c = oracle::random_poly(rng, 4, 0.7);  // c_1..c_5
        const auto base = body_map_S(spec, c);
        for (std::size_t p = 2; p <= 6; ++p) {
            auto moved = c;
            const Complex dc = oracle::random_in_disk(rng, 0.3);
            moved[p - 2] += dc;
            const auto out = body_map_S(spec, moved);
            for (std::size_t q = 2; q < p; ++q) EXPECT_EQ(out[q - 2], base[q - 2]);
            EXPECT_LE(std::abs(out[p - 2] - base[p - 2] - spec.alpha(1) * spec.beta(1) * dc), 1e-12);
        }
    }
}

TEST(BodyMaps, KAgreesWithSeriesInversion) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        const auto spec = random_family(rng, 6);
        auto c = oracle::random_poly(rng, 4, 0.8);
        const auto k = body_map_K(spec, c);
        oracle::Poly jet(6, 0.0);
        std::copy(c.begin(), c.end(), jet.begin() + 1);
        const auto f = oracle::mul(poly(spec.phi()), oracle::compose_by_powers(poly(spec.psi()), jet, 6), 6);
        const auto g = oracle::invert_by_powers(f);
        for (std::size_t m = 2; m <= 6; ++m) EXPECT_LE(std::abs(k[m - 2] - g[m]), 1e-10 * std::max(1.0, std::abs(g[m])));
    }
    const auto k0 = body_map_K(make_preset("psi_delta"), std::vector<Complex>{0.0});
    EXPECT_EQ(k0[0], Complex(0.0));
}

TEST(BodyPoint, PipelineEquivalenceAndBoundaryCircle) {
    std::mt19937_64 rng(31);
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto spec = random_family(rng, 6);
        const std::size_t n = 2 + t % 5;
        const auto gam = sample_schur(n - 1, 1.0, derive_seed(31, t));
        const auto pt = body_point(spec, gam, n);
        const auto g = inverse_coeffs(spec, schur_to_taylor(gam, n - 1), n);
        for (std::size_t m = 2; m <= n; ++m) EXPECT_LE(std::abs(pt[m - 2] - g[m]), 1e-9 * std::max(1.0, std::abs(g[m])));
    }
    const auto spec = make_preset("convex", {.delta = 0.2});
    const auto disk = range_b2(spec);
    EXPECT_LE(std::abs(body_point(spec, SchurSequence{{0.0}, std::nullopt, true}, 2)[0] - disk.center), 1e-15);
    for (double th = 0.0; th < 6.28; th += 0.1) {
        const auto pt = body_point(spec, SchurSequence{{std::polar(1.0, th)}, 1, true}, 2);
        EXPECT_NEAR(disk.distance(pt[0]), disk.radius, 1e-12);
    }
}

TEST(FeketeSzegoTransfer, InverseFunctionalIdentities) {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
        auto p = oracle::random_poly(rng, 5, 1.0);
        p[0] = 0.0;
        p[1] = std::polar(0.5 + std::abs(p[1]), std::arg(p[1]));
        const TruncatedSeries f(p);
        const auto g = invert(f);
        const Complex b = g[1];
        for (double re = -2.0; re <= 3.0; re += 0.5) {
            for (double im = -1.0; im <= 1.0; im += 0.5) {
                const Complex lam(re, im);
                const Complex lhs1 = fekete_szego(g, 1, lam);
                const Complex rhs1 = -std::pow(b, 6) * fekete_szego(f, 1, 2.0 - lam);
                EXPECT_LE(std::abs(lhs1 - rhs1), 1e-9 * std::max(1.0, std::abs(lhs1)));
                const Complex lhs2 = fekete_szego(g, 2, lam);
                const Complex rhs2 = std::pow(b, 8) * fekete_szego(f, 2, lam) +
                                     (4.0 * lam - 5.0) * std::pow(b, 10) * f[2] * f[2] * fekete_szego(f, 1, 1.0);
                EXPECT_LE(std::abs(lhs2 - rhs2), 1e-9 * std::max(1.0, std::abs(lhs2)));
            }
        }
    }
}

TEST(Boundedness, CoefficientsStayFiniteNearTheBoundary) {
    const auto spec = make_preset("koebe_squared_quotient");
    double envelope = 0.0;
    for (std::uint64_t t = 0; t < 20000; ++t) {
        const auto g = inverse_coeffs(spec, schur_to_taylor(sample_schur(5, 1.0, derive_seed(3, t)), 5), 6);
        for (std::size_t m = 2; m <= 6; ++m) {
            ASSERT_TRUE(is_finite(g[m]));
            envelope = std::max(envelope, std::abs(g[m]));
        }
    }
    EXPECT_LT(envelope, 1e6);
}
