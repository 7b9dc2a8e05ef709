#include <gtest/gtest.h>

#include <random>

#include "coeffbody/reversion.hpp"
#include "coeffbody/series.hpp"
#include "oracles.hpp"

using namespace coeffbody;

namespace {

TruncatedSeries from(const oracle::Poly& p) { return TruncatedSeries(p); }

oracle::Poly to_poly(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

void expect_series_near(const TruncatedSeries& got, std::vector<Complex> want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_LE(std::abs(got[k] - want[k]), tol) << "coefficient " << k;
}

}  // namespace

TEST(TruncatedSeries, RejectsNonFiniteAndEmpty) {
    EXPECT_THROW(TruncatedSeries(std::vector<Complex>{}), DomainError);
    EXPECT_THROW(TruncatedSeries({1.0, Complex(std::nan(""), 0.0)}), DomainError);
    EXPECT_THROW(TruncatedSeries({Complex(0.0, INFINITY)}), DomainError);
    try {
        TruncatedSeries({1.0, Complex(std::nan(""), 0.0)});
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "NonFiniteCoefficient");
    }
}

TEST(TruncatedSeries, CheckedAccessPastOrderThrows) {
    const TruncatedSeries f{1.0, 2.0};
    EXPECT_EQ(f.at(1), Complex(2.0));
    EXPECT_THROW(f.at(2), DomainError);
    EXPECT_EQ(f.truncated(3).order(), 3u);
    EXPECT_EQ(f.truncated(3)[3], Complex(0.0));
}

TEST(Multiply, HandExamples) {
    expect_series_near(multiply({1.0, 1.0, 0.0}, {1.0, -1.0, 0.0}), {1.0, 0.0, -1.0}, 0.0);
    const TruncatedSeries f{0.5, Complex(1, 2), -3.0};
    EXPECT_EQ(multiply(f, TruncatedSeries::constant(1.0, 2)), f);
    expect_series_near(multiply({0.0, 1.0, 1.0, 0.0, 0.0}, {0.0, 1.0, 1.0, 0.0, 0.0}), {0.0, 0.0, 1.0, 2.0, 1.0}, 0.0);
}

TEST(Multiply, MixedOrdersTruncateToShorter) {
    EXPECT_EQ(multiply({1.0, 1.0, 1.0, 1.0}, {1.0, 1.0}).order(), 1u);
    EXPECT_EQ((TruncatedSeries{1.0, 2.0, 3.0} + TruncatedSeries{1.0}).order(), 0u);
}

TEST(Multiply, CommutativeAndAssociativeOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto f = from(oracle::random_poly(rng, 8, 1.0));
        const auto g = from(oracle::random_poly(rng, 8, 1.0));
        const auto h = from(oracle::random_poly(rng, 8, 1.0));
        EXPECT_LE(oracle::max_abs_diff(to_poly(multiply(f, g)), to_poly(multiply(g, f))), 1e-12);
        EXPECT_LE(oracle::max_abs_diff(to_poly(multiply(multiply(f, g), h)), to_poly(multiply(f, multiply(g, h)))),
                  1e-12);
    }
}

TEST(Reciprocal, InvertsUnderMultiplication) {
    std::mt19937_64 rng(5);
    auto p = oracle::random_poly(rng, 7, 1.0);
    p[0] = Complex(1.5, -0.5);
    const auto f = from(p);
    expect_series_near(multiply(f, reciprocal(f)), {1, 0, 0, 0, 0, 0, 0, 0}, 1e-12);
    EXPECT_THROW(reciprocal({0.0, 1.0}), DomainError);
}

TEST(Compose, HandExamples) {
    expect_series_near(compose({1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}), {1.0, 0.0, 1.0}, 0.0);
    expect_series_near(compose({1.0, 1.0, 1.0, 1.0}, {0.0, 1.0, 1.0, 0.0}), {1.0, 1.0, 2.0, 3.0}, 1e-15);
    const TruncatedSeries h{0.3, Complex(0, 1), 2.0, -1.0};
    EXPECT_EQ(compose(h, TruncatedSeries::identity(3)), h);
}

TEST(Compose, RejectsInnerSeriesWithConstantTerm) {
    try {
        compose({1.0, 1.0}, {0.5, 1.0});
        FAIL() << "expected a DomainError";
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "NonZeroConstantTerm");
    }
    EXPECT_THROW(compose_faa_di_bruno({1.0, 1.0}, {0.5, 1.0}), DomainError);
}

TEST(Compose, HornerBellAndPowerRoutesAgree) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        auto g = oracle::random_poly(rng, 12, 1.0);
        g[0] = 0.0;
        const auto h = oracle::random_poly(rng, 12, 1.0);
        const auto horner = compose(from(h), from(g));
        const auto bell = compose_faa_di_bruno(from(h), from(g));
        const auto powers = oracle::compose_by_powers(h, g, 12);
        EXPECT_LE(oracle::max_abs_diff(to_poly(horner), powers), 1e-9);
        EXPECT_LE(oracle::max_abs_diff(to_poly(bell), powers), 1e-9);
    }
}

TEST(Invert, HandExamples) {
    EXPECT_EQ(invert(TruncatedSeries::identity(5)), TruncatedSeries::identity(5));
    expect_series_near(invert({0.0, 1.0, 1.0, 0.0, 0.0}), {0.0, 1.0, -1.0, 2.0, -5.0}, 1e-12);
    expect_series_near(invert({0.0, 2.0, 0.0, 0.0}), {0.0, 0.5, 0.0, 0.0}, 0.0);
}

TEST(Invert, RejectsNonInvertibleJets) {
    try {
        invert({0.0, 0.0, 1.0});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "NotLocallyInvertible");
    }
    try {
        invert({1.0, 1.0});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.name(), "NonZeroConstantTerm");
    }
}

TEST(Invert, RoundTripAndUndeterminedCoefficientOracle) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> mod(0.5, 2.0), ang(0.0, 6.283185307179586);
    for (int t = 0; t < 100; ++t) {
        for (std::size_t order : {4u, 8u, 12u}) {
            auto p = oracle::random_poly(rng, order, 1.0);
            p[0] = 0.0;
            p[1] = std::polar(mod(rng), ang(rng));
            const auto f = from(p);
            const auto g = invert(f);
            // |f_1| = 1/2 makes g_n grow like 4^n, so errors are measured relative to the largest g_n
            double scale = 1.0;
            for (Complex c : g.coeffs()) scale = std::max(scale, std::abs(c));
            auto round = to_poly(compose(g, f));
            round[1] -= 1.0;
            EXPECT_LE(oracle::max_abs_diff(round, oracle::Poly(order + 1, 0.0)), 1e-9 * scale);
            EXPECT_LE(oracle::max_abs_diff(to_poly(g), oracle::invert_by_powers(p)), 1e-9 * scale);
        }
    }
}
