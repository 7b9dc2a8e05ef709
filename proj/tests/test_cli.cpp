#include <gtest/gtest.h>

#include <sstream>

#include "coeffbody/cli.hpp"

using namespace coeffbody;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

Complex as_complex(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

}  // namespace

TEST(ParseComplex, AcceptedForms) {
    EXPECT_EQ(parse_complex("2"), Complex(2.0, 0.0));
    EXPECT_EQ(parse_complex("-1.5i"), Complex(0.0, -1.5));
    EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
    EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
    EXPECT_EQ(parse_complex("0.5-2i"), Complex(0.5, -2.0));
    EXPECT_EQ(parse_complex("1e-3+4e2i"), Complex(1e-3, 400.0));
    EXPECT_EQ(parse_complex(" 3+i "), Complex(3.0, 1.0));
}

TEST(ParseComplex, RejectsGarbage) {
    for (const char* bad : {"", "abc", "1+", "1+2", "nan", "inf", "1e999", "2ii", "+-1"}) {
        try {
            parse_complex(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const DomainError& e) {
            EXPECT_EQ(e.name(), "MalformedComplex") << bad;
        }
    }
}

TEST(FormatComplex, RoundTripsAtFullPrecision) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int t = 0; t < 1000; ++t) {
        const Complex z(u(rng) * std::pow(10.0, t % 7 - 3), u(rng));
        EXPECT_EQ(parse_complex(format_complex(z)), z);
    }
    EXPECT_EQ(format_complex(Complex(2.0, 0.0)), "2");
    EXPECT_EQ(parse_complex(format_complex(Complex(0.0, -0.1))), Complex(0.0, -0.1));
}

TEST(Cli, BellExample) {
    const auto j = run_json({"bell", "--n", "4", "--k", "2", "--x", "1,1,0", "--indices"});
    EXPECT_EQ(as_complex(j["value"]), Complex(1.0));
    EXPECT_EQ(j["indices"].size(), 2u);
    const auto c = run_json({"bell", "--n", "2", "--x", "1,2"});
    EXPECT_EQ(as_complex(c["value"]), Complex(3.0));
}

TEST(Cli, DetIdentity) {
    const auto j = run_json({"det-identity", "--p", "5", "--w", "0.3-1.2i", "--c", "1,2i,-0.5,0.25+0.25i,3"});
    EXPECT_LE(j["abs_diff"].get<double>(), 1e-12);
}

TEST(Cli, SchurRoundTrip) {
    const auto j = run_json({"schur", "--gammas", "0.5,0.25i", "--n", "2"});
    EXPECT_NEAR(as_complex(j["omega"][2]).imag(), 0.75 * 0.25, 1e-15);
    const auto back = run_json({"schur", "--omega", "0,0.5,0.1875i"});
    EXPECT_NEAR(as_complex(back["schur"]["gammas"][1]).imag(), 0.25, 1e-15);
}

TEST(Cli, RangeAndBoundExamples) {
    const auto d = run_json({"range", "--preset", "koebe_squared_quotient", "--coeff", "b2"});
    EXPECT_NEAR(std::abs(as_complex(d["center"])), 0.0, 1e-15);
    EXPECT_NEAR(d["radius"].get<double>(), 4.0, 1e-12);

    const auto p = run_json({"fs-bound", "--which", "phi1F", "--preset", "psi_delta", "--lambda", "1"});
    EXPECT_NEAR(p["value"].get<double>(), 2.0, 1e-12);
    EXPECT_TRUE(p["sharp"].get<bool>());

    const auto s = run_json({"fs-bound", "--which", "star", "--lambda", "0.5"});
    EXPECT_NEAR(s["value"].get<double>(), 3.0, 1e-12);
    EXPECT_EQ(s["branch"], "in_Delta");
}

TEST(Cli, CoeffsAndInverse) {
    const auto f = run_json({"inverse", "--series", "0,1,1,0"});
    EXPECT_EQ(as_complex(f["G"][2]), Complex(-1.0));
    EXPECT_EQ(as_complex(f["G"][3]), Complex(2.0));
    const auto c = run_json({"coeffs", "--preset", "identity", "--gammas", "1", "--n", "3"});
    EXPECT_EQ(c["F"].size(), 4u);
}

TEST(Cli, SweepReportsSeedAndIsDeterministic) {
    const std::vector<std::string> args{"sweep", "--preset", "koebe", "--functional", "b3", "--samples", "200",
                                        "--seed", "99", "--grid-theta", "16"};
    auto a = run_json(args);
    auto b = run_json(args);
    EXPECT_EQ(a["seed"], 99);
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, PlainAndCsvFormats) {
    const auto plain = run({"--format", "plain", "fs-bound", "--which", "convex", "--lambda", "2"});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("value: 13"), std::string::npos) << plain.out;
    const auto csv = run({"--format", "csv", "fs-bound", "--which", "convex", "--lambda", "2"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"bell", "--n", "3"}).code, 2);
    const auto bad_complex = run({"fs-bound", "--which", "star", "--lambda", "1+"});
    EXPECT_EQ(bad_complex.code, 2);
    EXPECT_NE(bad_complex.err.find("MalformedComplex"), std::string::npos);
    EXPECT_EQ(run({"range", "--preset", "nope"}).code, 2);
    const auto domain = run({"inverse", "--series", "0,0,1"});
    EXPECT_EQ(domain.code, 1);
    EXPECT_NE(domain.err.find("NotLocallyInvertible"), std::string::npos) << domain.err;
    EXPECT_EQ(run({"sweep", "--functional", "phi2_F", "--preset", "koebe", "--samples", "5"}).code, 1);
}
