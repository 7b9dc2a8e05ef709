#pragma once

// Sampling harness: random Schur samples plus explicit θ-grids over Blaschke
// witnesses, pushed through schur -> ω -> F -> G and compared to the bounds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "coeffbody/bounds.hpp"
#include "coeffbody/error.hpp"
#include "coeffbody/families.hpp"
#include "coeffbody/reversion.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"

namespace coeffbody {

enum class Functional { b2, b3, phi1_F, phi2_F, phi1_G, phi2_G, phi2_G_composite, phi1_ctc, body_coord };

inline std::string functional_name(Functional f) {
    switch (f) {
        case Functional::b2: return "b2";
        case Functional::b3: return "b3";
        case Functional::phi1_F: return "phi1_F";
        case Functional::phi2_F: return "phi2_F";
        case Functional::phi1_G: return "phi1_G";
        case Functional::phi2_G: return "phi2_G";
        case Functional::phi2_G_composite: return "phi2_G_composite";
        case Functional::phi1_ctc: return "phi1_ctc";
        case Functional::body_coord: return "body_coord";
    }
    return "?";
}

inline Functional parse_functional(std::string_view s) {
    for (auto f : {Functional::b2, Functional::b3, Functional::phi1_F, Functional::phi2_F, Functional::phi1_G,
                   Functional::phi2_G, Functional::phi2_G_composite, Functional::phi1_ctc, Functional::body_coord}) {
        if (functional_name(f) == s) return f;
    }
    throw DomainError(errc::bad_parameter, "unknown functional '" + std::string(s) + "'");
}

struct SweepConfig {
    std::string spec_name = "psi_delta";
    PresetParams params;
    Functional functional = Functional::b2;
    std::size_t body_n = 4;  // coefficient index for body_coord
    Complex lambda = 1.0;
    std::size_t samples = 10000;
    double radius_cap = 1.0;
    std::uint64_t seed = 1;
    std::size_t grid_theta = 720;
    unsigned threads = 1;
    double tolerance = 1e-9;
    bool record_samples = false;
};

struct SampleRecord {
    std::size_t index = 0;
    std::string source;  // "random" or a witness kind
    double value = 0.0;
    double excess = 0.0;  // > 0 means a violation beyond the tolerance-free bound
    SchurSequence gammas;
};

struct SweepResult {
    std::string spec_name;
    std::string functional;
    Complex lambda = 1.0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t witness_evaluations = 0;
    std::size_t skipped = 0;
    double empirical_sup = 0.0;
    double bound_value = 0.0;
    std::string bound_source;
    bool sharp = false;
    std::size_t violation_count = 0;
    double max_excess = -std::numeric_limits<double>::infinity();
    SchurSequence argmax_witness;
    std::string argmax_source;
    double attainment_gap = 0.0;
    double runtime_ms = 0.0;
    std::vector<SampleRecord> records;
};

/// The closed-form bound a functional is compared against, for one λ.
struct MatchedBound {
    double value = 0.0;
    std::string source;
    bool sharp = false;
    bool per_sample_disk = false;  // b2/b3/body_coord also test disk membership per sample
};

inline MatchedBound matching_bound(const FamilySpec& spec, Functional f, Complex lambda) {
    const bool id = spec.phi_is_identity();
    const bool psi_d = spec.psi_kind() == PsiKind::psi_delta;
    const bool starlike = spec.phi_kind() == PhiKind::koebe && psi_d;
    const bool convex = spec.phi_kind() == PhiKind::convex && psi_d && spec.delta() == 0.0;
    auto no_bound = [&]() -> MatchedBound {
        throw DomainError(errc::no_bound, "no bound for " + functional_name(f) + " on this family");
    };
    switch (f) {
        case Functional::b2: return {range_b2(spec).max_modulus(), "range_b2", true, true};
        case Functional::b3: return {b3_modulus_bound(spec), "range_b3", id, true};
        case Functional::body_coord: return {0.0, "range_generic", false, true};
        case Functional::phi1_F:
            if (id) return {bound_phi1_id(spec, lambda).value, "phi1_identity", true, false};
            if (starlike) return {bound_fs_star(spec.delta(), lambda).value, "fs_star", false, false};
            if (convex) return {bound_fs_convex(lambda).value, "fs_convex", false, false};
            return no_bound();
        case Functional::phi1_ctc:
            if (starlike) return {bound_fs_close_to_convex(spec.delta(), lambda).value, "fs_close_to_convex", false, false};
            return no_bound();
        case Functional::phi2_F:
            if (id) return {bound_phi2_id(spec, lambda).value, "phi2_identity", false, false};
            return no_bound();
        case Functional::phi1_G: {
            if (id) return {bound_phi_inverse(spec, InverseFunctional::phi1, lambda).value, "phi1_inverse", true, false};
            const double scale = std::pow(std::abs(spec.b()), 6);
            if (starlike) return {scale * bound_fs_star(spec.delta(), 2.0 - lambda).value, "fs_star_inverse", false, false};
            if (convex) return {scale * bound_fs_convex(2.0 - lambda).value, "fs_convex_inverse", false, false};
            return no_bound();
        }
        case Functional::phi2_G:
            if (id) return {bound_phi_inverse(spec, InverseFunctional::phi2, lambda).value, "phi2_inverse", false, false};
            return no_bound();
        case Functional::phi2_G_composite:
            if (id) {
                return {bound_phi_inverse(spec, InverseFunctional::phi2_composite, lambda).value,
                        "phi2_inverse_composite", false, false};
            }
            return no_bound();
    }
    return no_bound();
}

/// Order of the F jet a functional reads.
inline std::size_t forward_order(Functional f, std::size_t body_n) {
    switch (f) {
        case Functional::b2: return 2;
        case Functional::b3:
        case Functional::phi1_F:
        case Functional::phi1_G:
        case Functional::phi1_ctc: return 3;
        case Functional::phi2_F:
        case Functional::phi2_G:
        case Functional::phi2_G_composite: return 4;
        case Functional::body_coord: return body_n;
    }
    return 4;
}

namespace detail {

/// λ-independent part of one pipeline evaluation.
struct PipelinePoint {
    TruncatedSeries omega;
    TruncatedSeries f;
    TruncatedSeries g;
    std::optional<DiskRange> disk;  // per-sample disk for b2/b3/body_coord, when defined
};

inline bool needs_inverse(Functional f) {
    return f == Functional::b2 || f == Functional::b3 || f == Functional::body_coord || f == Functional::phi1_G ||
           f == Functional::phi2_G || f == Functional::phi2_G_composite;
}

inline PipelinePoint run_pipeline(const FamilySpec& spec, Functional f, std::size_t body_n,
                                  const TruncatedSeries& omega) {
    const std::size_t n = forward_order(f, body_n);
    PipelinePoint pt{omega, forward_coeffs(spec, omega, n), TruncatedSeries(), std::nullopt};
    if (needs_inverse(f)) pt.g = invert(pt.f);
    if (f == Functional::b2) {
        pt.disk = range_b2(spec);
    } else if (f == Functional::b3) {
        const SchurSequence rec = taylor_to_schur(omega);
        pt.disk = range_b3(spec, rec.gamma(1));
    } else if (f == Functional::body_coord) {
        const SchurSequence rec = taylor_to_schur(omega);
        bool interior = true;
        for (std::size_t j = 1; j + 2 <= n; ++j) interior = interior && std::abs(rec.gamma(j)) < 1.0;
        if (interior) pt.disk = range_generic(spec, rec, n);
    }
    return pt;
}

inline Complex functional_value(Functional f, std::size_t body_n, const PipelinePoint& pt, Complex lambda) {
    switch (f) {
        case Functional::b2: return pt.g[2];
        case Functional::b3: return pt.g[3];
        case Functional::body_coord: return pt.g[body_n];
        case Functional::phi1_F: return fekete_szego(pt.f, 1, lambda);
        case Functional::phi2_F: return fekete_szego(pt.f, 2, lambda);
        case Functional::phi1_G: return fekete_szego(pt.g, 1, lambda);
        case Functional::phi2_G:
        case Functional::phi2_G_composite: return fekete_szego(pt.g, 2, lambda);
        case Functional::phi1_ctc: {
            // f_n = a_n / n for f with z f' = F
            const Complex f1 = pt.f[1], f2 = pt.f[2] / 2.0, f3 = pt.f[3] / 3.0;
            return f1 * f3 - lambda * f2 * f2;
        }
    }
    return 0.0;
}

struct Accumulator {
    double sup = -1.0;
    std::size_t argmax_index = 0;
    SchurSequence argmax;
    std::string argmax_source;
    std::size_t violations = 0;
    double max_excess = -std::numeric_limits<double>::infinity();
    double disk_bound = 0.0;  // body_coord: max over samples of |center| + radius
    std::size_t skipped = 0;
    std::vector<SampleRecord> records;

    void merge(Accumulator&& other) {
        if (other.sup > sup) {
            sup = other.sup;
            argmax_index = other.argmax_index;
            argmax = std::move(other.argmax);
            argmax_source = std::move(other.argmax_source);
        }
        violations += other.violations;
        max_excess = std::max(max_excess, other.max_excess);
        disk_bound = std::max(disk_bound, other.disk_bound);
        skipped += other.skipped;
        records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                       std::make_move_iterator(other.records.end()));
    }
};

struct SweepContext {
    const FamilySpec& spec;
    const SweepConfig& cfg;
    const std::vector<Complex>& lambdas;
    const std::vector<MatchedBound>& bounds;
};

inline void accumulate(const SweepContext& ctx, std::vector<Accumulator>& acc, std::size_t index,
                       const std::string& source, const SchurSequence& gammas, const TruncatedSeries& omega,
                       bool count_skips) {
    const Functional f = ctx.cfg.functional;
    std::optional<PipelinePoint> pt;
    try {
        pt = run_pipeline(ctx.spec, f, ctx.cfg.body_n, omega);
    } catch (const DomainError&) {
        pt.reset();
    }
    for (std::size_t l = 0; l < ctx.lambdas.size(); ++l) {
        Accumulator& a = acc[l];
        if (!pt) {
            if (count_skips) ++a.skipped;
            continue;
        }
        const Complex v = functional_value(f, ctx.cfg.body_n, *pt, ctx.lambdas[l]);
        if (!is_finite(v)) {
            if (count_skips) ++a.skipped;
            continue;
        }
        const double m = std::abs(v);
        double excess = -std::numeric_limits<double>::infinity();
        if (ctx.bounds[l].per_sample_disk && pt->disk) {
            excess = pt->disk->distance(v) - pt->disk->radius;
            a.disk_bound = std::max(a.disk_bound, pt->disk->max_modulus());
        }
        if (f != Functional::body_coord) excess = std::max(excess, m - ctx.bounds[l].value);
        if (excess > ctx.cfg.tolerance) ++a.violations;
        a.max_excess = std::max(a.max_excess, excess);
        if (m > a.sup) {
            a.sup = m;
            a.argmax_index = index;
            a.argmax = gammas;
            a.argmax_source = source;
        }
        if (ctx.cfg.record_samples) a.records.push_back({index, source, m, excess, gammas});
    }
}

inline SchurSequence witness_schur(const BlaschkeWitness& w) {
    SchurSequence s;
    if (const auto* r = std::get_if<Rotation>(&w)) {
        s.gammas = {std::polar(1.0, r->theta)};
        s.terminated_at = 1;
    } else if (const auto* q = std::get_if<SquaredRotation>(&w)) {
        s.gammas = {0.0, std::polar(1.0, q->theta)};
        s.terminated_at = 2;
    } else {
        const auto& d = std::get<Degree2>(w);
        s.gammas = {d.gamma1, std::polar(1.0, d.theta)};
        s.terminated_at = 2;
    }
    return s;
}

/// Boundary witnesses probed on the θ-grid for one λ-independent sweep.
inline std::vector<BlaschkeWitness> witness_grid(const FamilySpec& spec, Functional f,
                                                 const std::vector<Complex>& lambdas, std::size_t grid) {
    std::vector<BlaschkeWitness> out;
    for (std::size_t k = 0; k < grid; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
        out.emplace_back(Rotation{theta});
        out.emplace_back(SquaredRotation{theta});
        if (f == Functional::b3) out.emplace_back(Degree2{std::polar(0.5, theta), theta});
    }
    // Aligned degree-2 witnesses of the Φ_1 bound over B_{Id,ψ}/A_{Id,ψ}, one set per λ.
    if ((f == Functional::phi1_F || f == Functional::phi1_G) && spec.phi_is_identity() &&
        spec.beta(1) != Complex(0.0)) {
        const std::size_t coarse = std::max<std::size_t>(1, grid / 8);
        for (Complex lambda : lambdas) {
            const Complex lam = f == Functional::phi1_G ? 2.0 - lambda : lambda;
            for (std::size_t k = 0; k < coarse; ++k) {
                const Complex g1 = std::polar(0.5, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                                       static_cast<double>(coarse));
                try {
                    out.emplace_back(Degree2{g1, std::arg(aligned_gamma2(spec, lam, g1))});
                } catch (const DomainError&) {
                    break;  // balanced case: no aligned family
                }
            }
        }
    }
    return out;
}

}  // namespace detail

/// One sweep per λ over a shared set of samples. Result l equals
/// run_sweep with cfg.lambda = lambdas[l].
inline std::vector<SweepResult> run_sweep_lambdas(const FamilySpec& spec, const SweepConfig& cfg,
                                                  const std::vector<Complex>& lambdas) {
    if (cfg.samples < 1) throw DomainError(errc::bad_parameter, "samples must be >= 1");
    if (!(cfg.radius_cap > 0.0 && cfg.radius_cap <= 1.0)) {
        throw DomainError(errc::bad_parameter, "radius_cap must lie in (0, 1]");
    }
    if (cfg.functional == Functional::body_coord && cfg.body_n < 2) {
        throw DomainError(errc::bad_index, "body_coord needs n >= 2");
    }
    if (lambdas.empty()) throw DomainError(errc::bad_parameter, "at least one λ is required");
    const auto start = std::chrono::steady_clock::now();

    std::vector<MatchedBound> bounds;
    for (Complex l : lambdas) bounds.push_back(matching_bound(spec, cfg.functional, l));
    const detail::SweepContext ctx{spec, cfg, lambdas, bounds};
    const std::size_t n_forward = forward_order(cfg.functional, cfg.body_n);
    const std::size_t n_params = std::max<std::size_t>(1, n_forward - 1);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<detail::Accumulator> acc(lambdas.size());
        for (std::size_t i = begin; i < end; ++i) {
            const SchurSequence gammas = sample_schur(n_params, cfg.radius_cap, derive_seed(cfg.seed, i));
            detail::accumulate(ctx, acc, i, "random", gammas, schur_to_taylor(gammas, n_params), true);
        }
        return acc;
    };

    const unsigned threads = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.samples)));
    std::vector<std::vector<detail::Accumulator>> shards(threads);
    if (threads == 1) {
        shards[0] = run_range(0, cfg.samples);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = cfg.samples * t / threads;
            const std::size_t end = cfg.samples * (t + 1) / threads;
            workers.emplace_back([&, t, begin, end] { shards[t] = run_range(begin, end); });
        }
        for (auto& w : workers) w.join();
    }
    std::vector<detail::Accumulator> total(lambdas.size());
    for (auto& shard : shards) {
        for (std::size_t l = 0; l < lambdas.size(); ++l) total[l].merge(std::move(shard[l]));
    }

    const auto witnesses = detail::witness_grid(spec, cfg.functional, lambdas, cfg.grid_theta);
    {
        std::vector<detail::Accumulator> acc(lambdas.size());
        for (std::size_t j = 0; j < witnesses.size(); ++j) {
            detail::accumulate(ctx, acc, cfg.samples + j, witness_kind_name(witnesses[j]),
                               detail::witness_schur(witnesses[j]), blaschke_witness(witnesses[j], n_params), false);
        }
        for (std::size_t l = 0; l < lambdas.size(); ++l) total[l].merge(std::move(acc[l]));
    }

    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::vector<SweepResult> out;
    for (std::size_t l = 0; l < lambdas.size(); ++l) {
        auto& a = total[l];
        if (a.skipped * 1000 > cfg.samples) {
            throw DomainError(errc::excessive_skips, std::to_string(a.skipped) + " of " +
                                                         std::to_string(cfg.samples) + " samples skipped");
        }
        SweepResult r;
        r.spec_name = cfg.spec_name;
        r.functional = functional_name(cfg.functional);
        if (cfg.functional == Functional::body_coord) r.functional += "(" + std::to_string(cfg.body_n) + ")";
        r.lambda = lambdas[l];
        r.seed = cfg.seed;
        r.samples = cfg.samples;
        r.witness_evaluations = witnesses.size();
        r.skipped = a.skipped;
        r.empirical_sup = std::max(0.0, a.sup);
        r.bound_value = cfg.functional == Functional::body_coord ? a.disk_bound : bounds[l].value;
        r.bound_source = bounds[l].source;
        r.sharp = bounds[l].sharp;
        r.violation_count = a.violations;
        r.max_excess = a.max_excess;
        r.argmax_witness = std::move(a.argmax);
        r.argmax_source = std::move(a.argmax_source);
        r.attainment_gap = r.bound_value - r.empirical_sup;
        r.runtime_ms = elapsed;
        std::sort(a.records.begin(), a.records.end(),
                  [](const SampleRecord& x, const SampleRecord& y) { return x.index < y.index; });
        r.records = std::move(a.records);
        out.push_back(std::move(r));
    }
    return out;
}

inline SweepResult run_sweep(const FamilySpec& spec, const SweepConfig& cfg) {
    return std::move(run_sweep_lambdas(spec, cfg, {cfg.lambda}).front());
}

inline SweepResult run_sweep(const SweepConfig& cfg) { return run_sweep(make_preset(cfg.spec_name, cfg.params), cfg); }

// ---------------------------------------------------------------------------
// Attainment at named extremals

struct AttainmentRecord {
    std::string functional;
    std::string witness_kind;
    double max_value = 0.0;
    double bound_value = 0.0;
    double gap = 0.0;           // bound - max
    double relative_gap = 0.0;  // gap / max(1, bound)
    bool attained = false;      // |relative_gap| <= 1e-9
    std::optional<BlaschkeWitness> argmax;
    std::size_t evaluations = 0;
    std::optional<double> circle_residual;  // b2/b3: max | |v - center| - radius | over the grid
};

inline AttainmentRecord check_attainment(const FamilySpec& spec, Functional f, Complex lambda,
                                         std::string_view witness_kind, std::size_t grid_theta = 720) {
    if (f == Functional::body_coord) throw DomainError(errc::bad_witness, "no named extremals for body_coord");
    const MatchedBound bound = matching_bound(spec, f, lambda);
    const bool phi1_id = (f == Functional::phi1_F || f == Functional::phi1_G) && spec.phi_is_identity();

    // Witness families admissible for this functional, and the "auto" choice.
    std::vector<std::string> allowed{"rotation", "squared_rotation"};
    std::vector<std::string> chosen;
    std::optional<BoundReport> report;
    if (f == Functional::b2) {
        allowed = {"rotation"};
        chosen = {"rotation"};
    } else if (f == Functional::b3) {
        allowed.push_back("degree2");
        if (spec.phi_is_identity() && spec.beta(1) != Complex(0.0)) {
            const double rot = std::pow(std::abs(spec.b()), 5) * std::abs(spec.beta_tilde());
            const double sq = std::pow(std::abs(spec.b()), 4) * std::abs(spec.alpha(1) * spec.beta(1));
            chosen = {rot >= sq ? "rotation" : "squared_rotation"};
        } else {
            chosen = {"rotation", "squared_rotation"};
        }
    } else if (phi1_id) {
        report = f == Functional::phi1_F ? bound_phi1_id(spec, lambda)
                                         : bound_phi_inverse(spec, InverseFunctional::phi1, lambda);
        if (report->branch == "beta1_zero") {
            allowed = {"rotation"};
        } else if (report->branch == "balanced") {
            allowed = {"squared_rotation"};
        } else {
            allowed.push_back("degree2");
        }
        chosen = {witness_kind_name(*report->witness)};
    } else {
        chosen = allowed;
    }
    std::vector<std::string> families;
    if (witness_kind == "auto") {
        families = chosen;
    } else {
        if (std::find(allowed.begin(), allowed.end(), witness_kind) == allowed.end()) {
            throw DomainError(errc::bad_witness, "witness '" + std::string(witness_kind) + "' does not apply to " +
                                                     functional_name(f) + " on this family");
        }
        families = {std::string(witness_kind)};
    }

    std::vector<BlaschkeWitness> witnesses;
    const std::size_t grid = std::max<std::size_t>(1, grid_theta);
    auto angle = [](std::size_t k, std::size_t m) {
        return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    };
    for (const auto& fam : families) {
        if (fam == "rotation") {
            for (std::size_t k = 0; k < grid; ++k) witnesses.emplace_back(Rotation{angle(k, grid)});
        } else if (fam == "squared_rotation") {
            for (std::size_t k = 0; k < grid; ++k) witnesses.emplace_back(SquaredRotation{angle(k, grid)});
        } else {
            const std::size_t coarse = std::max<std::size_t>(1, grid / 8);
            const Complex lam = f == Functional::phi1_G ? 2.0 - lambda : lambda;
            for (double r : {0.25, 0.5, 0.75}) {
                for (std::size_t k = 0; k < coarse; ++k) {
                    const Complex g1 = std::polar(r, angle(k, coarse));
                    if (phi1_id) {
                        witnesses.emplace_back(Degree2{g1, std::arg(aligned_gamma2(spec, lam, g1))});
                    } else {
                        for (std::size_t t = 0; t < coarse; ++t) witnesses.emplace_back(Degree2{g1, angle(t, coarse)});
                    }
                }
            }
        }
    }

    AttainmentRecord rec;
    rec.functional = functional_name(f);
    rec.witness_kind = std::string(witness_kind);
    rec.bound_value = bound.value;
    const std::size_t n_params = forward_order(f, 0) - 1;
    double residual = 0.0;
    for (const auto& w : witnesses) {
        const auto pt = detail::run_pipeline(spec, f, 0, blaschke_witness(w, n_params));
        const Complex v = detail::functional_value(f, 0, pt, lambda);
        if (pt.disk) residual = std::max(residual, std::abs(pt.disk->distance(v) - pt.disk->radius));
        if (std::abs(v) > rec.max_value || !rec.argmax) {
            rec.max_value = std::abs(v);
            rec.argmax = w;
        }
    }
    rec.evaluations = witnesses.size();
    rec.gap = rec.bound_value - rec.max_value;
    rec.relative_gap = rec.gap / std::max(1.0, rec.bound_value);
    rec.attained = std::abs(rec.relative_gap) <= 1e-9;
    if (f == Functional::b2 || f == Functional::b3) rec.circle_residual = residual;
    return rec;
}

// ---------------------------------------------------------------------------
// Rigidity near the boundary circles of the b_2 / b_3 disks

struct RigidityReport {
    std::string coefficient;
    double epsilon = 0.0;
    std::size_t samples = 0;
    std::size_t hits = 0;            // samples within epsilon of the boundary circle
    double max_delta = 0.0;          // worst distance of the recovered parameters from modulus 1
    double delta_bound = 0.0;        // δ(ε) implied by the coefficient formulas
    double scaling = 0.0;            // max_delta / epsilon
    std::size_t interior_points = 0; // samples at least 0.1·radius inside the disk
    double interior_min_delta = 1.0; // smallest parameter distance from modulus 1 among those
    bool consistent = true;
};

/// Recovers γ_1 (and γ_2) from b_2 (and b_3) and checks that points near the
/// boundary circle come from nearly unimodular Schur parameters.
inline RigidityReport rigidity_probe(const FamilySpec& spec, std::string_view coefficient, double epsilon,
                                     std::size_t samples = 20000, std::uint64_t seed = 1) {
    const bool is_b2 = coefficient == "b2";
    if (!is_b2 && coefficient != "b3") throw DomainError(errc::bad_parameter, "coefficient must be b2 or b3");
    if (!(epsilon > 0.0)) throw DomainError(errc::bad_parameter, "epsilon must be positive");
    if (spec.beta(1) == Complex(0.0)) throw DomainError(errc::bad_parameter, "rigidity probe needs β_1 != 0");
    const Complex b = spec.b();
    const Complex a1 = spec.alpha(1), beta0 = spec.beta(0), beta1 = spec.beta(1);
    const double k2 = std::pow(std::abs(b), 3) * std::abs(a1 * beta1);
    const double k3 = std::pow(std::abs(b), 4) * std::abs(a1 * beta1);

    RigidityReport rep;
    rep.coefficient = std::string(coefficient);
    rep.epsilon = epsilon;
    rep.samples = samples;
    rep.delta_bound = is_b2 ? epsilon / k2 : std::sqrt(epsilon / k3);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::uint64_t s = derive_seed(seed, i);
        SchurSequence gammas = sample_schur(2, 1.0, s);
        if (s & 1U) {
            // push one parameter to within 2ε of the unit circle
            const std::size_t which = is_b2 ? 0 : ((s >> 1) & 1U);
            const double u = static_cast<double>((s >> 11) & 0xFFFFF) / static_cast<double>(0xFFFFF);
            const double mod = 1.0 - 2.0 * epsilon * u;
            gammas.gammas[which] = std::polar(mod, std::arg(gammas.gammas[which]));
        }
        const auto g = inverse_coeffs(spec, schur_to_taylor(gammas, 2), 3);
        const Complex b3pow = b * b * b;
        const Complex gamma1 = -(g[2] / b3pow + spec.alpha(2) * beta0) / (a1 * beta1);
        double dist = 0.0, delta = 0.0, radius = 0.0;
        if (is_b2) {
            const DiskRange d = range_b2(spec);
            radius = d.radius;
            dist = d.radius - d.distance(g[2]);
            delta = 1.0 - std::abs(gamma1);
        } else {
            const Complex g1 = std::abs(gamma1) > 1.0 ? gamma1 / std::abs(gamma1) : gamma1;
            const DiskRange d = range_b3(spec, g1);
            radius = k3;
            dist = d.radius - d.distance(g[3]);
            const double w = 1.0 - std::norm(g1);
            double d2 = 1.0;
            if (w > 0.0) {
                const Complex gamma2 = (d.center - g[3]) / (b3pow * b * b * a1 * a1 * beta0 * beta1 * w);
                d2 = 1.0 - std::abs(gamma2);
            }
            delta = std::min(1.0 - std::abs(gamma1), d2);
        }
        if (dist <= epsilon) {
            ++rep.hits;
            rep.max_delta = std::max(rep.max_delta, delta);
        } else if (dist >= 0.1 * radius) {
            ++rep.interior_points;
            rep.interior_min_delta = std::min(rep.interior_min_delta, delta);
        }
    }
    rep.scaling = rep.max_delta / epsilon;
    rep.consistent = rep.max_delta <= rep.delta_bound * (1.0 + 1e-6) + 1e-12;
    return rep;
}

}  // namespace coeffbody
