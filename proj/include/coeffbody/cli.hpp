#pragma once

// Subcommand front end. dispatch() returns the process exit code:
// 0 success, 2 usage error (including malformed literals and unknown presets),
// 1 precondition violation reported as "error: <Name>: <message>".

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coeffbody/bell.hpp"
#include "coeffbody/bounds.hpp"
#include "coeffbody/error.hpp"
#include "coeffbody/families.hpp"
#include "coeffbody/io.hpp"
#include "coeffbody/reversion.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"
#include "coeffbody/verify.hpp"

namespace coeffbody::cli {

enum class Format { json, csv, plain };

struct FamilyOptions {
    std::string preset = "psi_delta";
    double delta = 0.0;
    std::string beta0 = "1";
    std::string beta = "1";
    std::size_t order = kDefaultPresetOrder;
    std::string phi_coeffs;
    std::string psi_coeffs;
};

inline void add_family_options(CLI::App* sub, FamilyOptions& o) {
    sub->add_option("--preset", o.preset, "identity|koebe|convex|psi_delta|koebe_squared_quotient|ex58");
    sub->add_option("--delta", o.delta, "δ of ψ_δ");
    sub->add_option("--beta0", o.beta0, "β_0 of ex58 (complex)");
    sub->add_option("--beta", o.beta, "β of ex58 (complex)");
    sub->add_option("--order", o.order, "jet order of the preset series");
    sub->add_option("--phi-coeffs", o.phi_coeffs, "custom φ jet α_0,α_1,... (overrides the preset φ)");
    sub->add_option("--psi-coeffs", o.psi_coeffs, "custom ψ jet β_0,β_1,... (overrides the preset ψ)");
}

inline FamilySpec build_family(const FamilyOptions& o) {
    PresetParams p;
    p.delta = o.delta;
    p.beta0 = parse_complex(o.beta0);
    p.beta = parse_complex(o.beta);
    p.order = o.order;
    FamilySpec base = make_preset(o.preset, p);
    if (o.phi_coeffs.empty() && o.psi_coeffs.empty()) return base;
    const bool custom_phi = !o.phi_coeffs.empty();
    const bool custom_psi = !o.psi_coeffs.empty();
    return FamilySpec(custom_phi ? TruncatedSeries(parse_complex_list(o.phi_coeffs)) : base.phi(),
                      custom_psi ? TruncatedSeries(parse_complex_list(o.psi_coeffs)) : base.psi(),
                      custom_phi ? PhiKind::custom : base.phi_kind(), custom_psi ? PsiKind::custom : base.psi_kind(),
                      custom_psi ? 0.0 : base.delta());
}

namespace detail {

inline bool is_complex_object(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im");
}

inline std::string scalar_text(const Json& j) {
    if (is_complex_object(j)) return format_complex({j["re"].get<double>(), j["im"].get<double>()});
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_float()) return coeffbody::detail::format_real(j.get<double>());
    return j.dump();
}

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object() && !is_complex_object(j)) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, scalar_text(j));
    }
}

inline void emit(const Json& j, Format f, std::ostream& out) {
    if (f == Format::json) {
        out << j.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (f == Format::plain) {
        for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].first;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i].second;
    out << '\n';
}

/// ω from either a full jet (c_0, c_1, ...) or Schur parameters.
/// Parameters after the first unimodular one are dropped: the sequence ends there.
inline SchurSequence schur_input(const std::string& gammas) {
    SchurSequence seq;
    for (Complex g : parse_complex_list(gammas)) {
        if (std::abs(g) > 1.0 + 1e-12) throw DomainError(errc::outside_disk, "Schur parameters need |γ| <= 1");
        seq.gammas.push_back(g);
        if (std::abs(std::abs(g) - 1.0) <= 1e-12) {
            seq.terminated_at = seq.gammas.size();
            break;
        }
    }
    return seq;
}

inline TruncatedSeries omega_input(const std::string& omega, const std::string& gammas, std::size_t order) {
    if (!omega.empty() && !gammas.empty()) {
        throw CLI::ValidationError("--omega and --gammas are mutually exclusive");
    }
    if (!omega.empty()) return TruncatedSeries(parse_complex_list(omega));
    if (gammas.empty()) throw CLI::ValidationError("one of --omega or --gammas is required");
    return schur_to_taylor(schur_input(gammas), order);
}

}  // namespace detail

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coefficient bodies and Fekete-Szego bounds for F = phi * (psi o omega) and its inverse"};
    app.name("coeffbody");
    app.require_subcommand(1);
    app.fallthrough();
    Format format = Format::json;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
    app.add_option("--format", format, "json|csv|plain")->transform(CLI::CheckedTransformer(formats));

    // bell
    auto* bell = app.add_subcommand("bell", "ordinary Bell polynomial B°_{n,k}(x), or the complete one without --k");
    std::size_t bell_n = 0, bell_k = 0;
    std::string bell_x;
    bool bell_indices = false;
    bell->add_option("--n", bell_n)->required();
    auto* bell_k_opt = bell->add_option("--k", bell_k);
    bell->add_option("--x", bell_x, "x_1,x_2,...")->required();
    bell->add_flag("--indices", bell_indices, "also list the multi-index set I(n,k)");

    // det-identity
    auto* det = app.add_subcommand("det-identity", "Σ w^{k-1} B°_{p,k}(c) against the Hessenberg determinant");
    std::size_t det_p = 0;
    std::string det_w = "1", det_c;
    det->add_option("--p", det_p)->required();
    det->add_option("--w", det_w);
    det->add_option("--c", det_c, "c_1,...,c_p")->required();

    // schur
    auto* schur = app.add_subcommand("schur", "Schur parameters <-> Taylor coefficients of ω");
    std::string schur_gammas, schur_omega;
    std::size_t schur_n = 0;
    schur->add_option("--gammas", schur_gammas, "γ_1,...,γ_m");
    schur->add_option("--omega", schur_omega, "ω jet c_0,c_1,... (c_0 = 0)");
    schur->add_option("--n", schur_n, "order of the ω jet built from --gammas (default m)");

    // coeffs / inverse
    FamilyOptions fam;
    auto* coeffs = app.add_subcommand("coeffs", "jet of F = φ·(ψ∘ω)");
    auto* inverse = app.add_subcommand("inverse", "jet of G = F^{-1}");
    std::string in_omega, in_gammas, in_series;
    std::size_t in_n = 4;
    for (auto* sub : {coeffs, inverse}) {
        add_family_options(sub, fam);
        sub->add_option("--omega", in_omega, "ω jet c_0,c_1,...");
        sub->add_option("--gammas", in_gammas, "Schur parameters of ω");
        sub->add_option("--n", in_n, "order of the output jet");
    }
    inverse->add_option("--series", in_series, "invert this jet f_0,f_1,... directly");

    // range
    auto* range = app.add_subcommand("range", "disk containing b_n");
    std::string range_coeff = "b2", range_gamma1 = "0", range_gammas;
    add_family_options(range, fam);
    range->add_option("--coeff", range_coeff, "b2, b3 or bN");
    range->add_option("--gamma1", range_gamma1, "γ_1 for b3");
    range->add_option("--gammas", range_gammas, "γ_1,...,γ_{N-2} for bN");

    // fs-bound
    auto* fs = app.add_subcommand("fs-bound", "closed-form Fekete-Szego bounds");
    std::string fs_which = "phi1F", lambda_text = "1";
    add_family_options(fs, fam);
    fs->add_option("--which", fs_which, "phi1F|phi2F|phi1G|phi2G|phi2G-composite|star|convex|ctc");
    fs->add_option("--lambda", lambda_text, "complex λ");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "never-exceed sweep with witness grid");
    SweepConfig cfg;
    std::string functional = "b2", csv_path;
    add_family_options(sweep, fam);
    sweep->add_option("--functional", functional, "b2|b3|phi1_F|phi2_F|phi1_G|phi2_G|phi2_G_composite|phi1_ctc|body_coord");
    sweep->add_option("--n", cfg.body_n, "coefficient index for body_coord");
    sweep->add_option("--lambda", lambda_text);
    sweep->add_option("--samples", cfg.samples);
    sweep->add_option("--radius-cap", cfg.radius_cap);
    sweep->add_option("--seed", cfg.seed);
    sweep->add_option("--grid-theta", cfg.grid_theta);
    sweep->add_option("--threads", cfg.threads);
    sweep->add_option("--csv", csv_path, "write per-sample records to this file");

    // attain
    auto* attain = app.add_subcommand("attain", "evaluate a functional at named extremal witnesses");
    std::string witness = "auto";
    std::size_t attain_grid = 720;
    add_family_options(attain, fam);
    attain->add_option("--functional", functional);
    attain->add_option("--lambda", lambda_text);
    attain->add_option("--witness", witness, "rotation|squared_rotation|degree2|auto");
    attain->add_option("--grid-theta", attain_grid);

    // probe
    auto* probe = app.add_subcommand("probe", "rigidity near the boundary of the b2/b3 disks");
    std::string probe_coeff = "b2";
    double probe_eps = 1e-6;
    std::size_t probe_samples = 20000;
    std::uint64_t probe_seed = 1;
    add_family_options(probe, fam);
    probe->add_option("--coeff", probe_coeff, "b2|b3");
    probe->add_option("--epsilon", probe_eps);
    probe->add_option("--samples", probe_samples);
    probe->add_option("--seed", probe_seed);

    std::vector<std::string> argv_store{"coeffbody"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Json result;
        if (bell->parsed()) {
            const auto x = parse_complex_list(bell_x);
            result["n"] = bell_n;
            if (*bell_k_opt) {
                result["k"] = bell_k;
                result["value"] = to_json(bell_partial(bell_n, bell_k, x));
                if (bell_indices) {
                    Json idx = Json::array();
                    for (const auto& j : multi_index_set(bell_n, bell_k).indices) idx.push_back(j);
                    result["indices"] = idx;
                }
            } else {
                result["k"] = nullptr;
                result["value"] = to_json(bell_complete(bell_n, x));
            }
        } else if (det->parsed()) {
            const Complex w = parse_complex(det_w);
            const auto c = parse_complex_list(det_c);
            const Complex d = bell_weighted_det(det_p, w, c);
            Complex sum = 0.0, wp = 1.0;
            for (std::size_t k = 1; k <= det_p; ++k, wp *= w) sum += wp * bell_partial(det_p, k, c);
            result = Json{{"p", det_p}, {"w", to_json(w)}, {"bell_sum", to_json(sum)},
                          {"determinant", to_json(d)}, {"abs_diff", std::abs(sum - d)}};
        } else if (schur->parsed()) {
            if (!schur_gammas.empty() && !schur_omega.empty()) {
                throw CLI::ValidationError("--omega and --gammas are mutually exclusive");
            }
            if (!schur_gammas.empty()) {
                const SchurSequence seq = detail::schur_input(schur_gammas);
                const std::size_t n = schur_n ? schur_n : seq.gammas.size();
                result = Json{{"gammas", to_json(std::span<const Complex>(seq.gammas))},
                              {"omega", to_json(schur_to_taylor(seq, n))}};
            } else if (!schur_omega.empty()) {
                const TruncatedSeries omega(parse_complex_list(schur_omega));
                result = Json{{"omega", to_json(omega)}, {"schur", to_json(taylor_to_schur(omega))}};
            } else {
                throw CLI::ValidationError("one of --omega or --gammas is required");
            }
        } else if (coeffs->parsed()) {
            const FamilySpec spec = build_family(fam);
            const auto omega = detail::omega_input(in_omega, in_gammas, in_n ? in_n - 1 : 0);
            result = Json{{"omega", to_json(omega)}, {"F", to_json(forward_coeffs(spec, omega, in_n))}};
        } else if (inverse->parsed()) {
            if (!in_series.empty()) {
                const TruncatedSeries f(parse_complex_list(in_series));
                result = Json{{"F", to_json(f)}, {"G", to_json(invert(f))}};
            } else {
                const FamilySpec spec = build_family(fam);
                const auto omega = detail::omega_input(in_omega, in_gammas, in_n ? in_n - 1 : 0);
                const auto f = forward_coeffs(spec, omega, in_n);
                result = Json{{"omega", to_json(omega)}, {"F", to_json(f)}, {"G", to_json(invert(f))}};
            }
        } else if (range->parsed()) {
            const FamilySpec spec = build_family(fam);
            if (range_coeff.size() < 2 || range_coeff[0] != 'b') {
                throw CLI::ValidationError("--coeff must look like b2, b3, b4, ...");
            }
            std::size_t n = 0;
            try {
                n = std::stoul(range_coeff.substr(1));
            } catch (const std::exception&) {
                throw CLI::ValidationError("--coeff must look like b2, b3, b4, ...");
            }
            DiskRange d;
            if (n == 2) {
                d = range_b2(spec);
            } else if (n == 3 && range_gammas.empty()) {
                d = range_b3(spec, parse_complex(range_gamma1));
            } else {
                SchurSequence seq;
                if (!range_gammas.empty()) seq.gammas = parse_complex_list(range_gammas);
                d = range_generic(spec, seq, n);
            }
            result = to_json(d);
            result["coeff"] = range_coeff;
        } else if (fs->parsed()) {
            const Complex lambda = parse_complex(lambda_text);
            BoundReport r;
            if (fs_which == "star") {
                r = bound_fs_star(fam.delta, lambda);
            } else if (fs_which == "convex") {
                r = bound_fs_convex(lambda);
            } else if (fs_which == "ctc") {
                r = bound_fs_close_to_convex(fam.delta, lambda);
            } else {
                const FamilySpec spec = build_family(fam);
                if (fs_which == "phi1F") {
                    r = bound_phi1_id(spec, lambda);
                } else if (fs_which == "phi2F") {
                    r = bound_phi2_id(spec, lambda);
                } else if (fs_which == "phi1G") {
                    r = bound_phi_inverse(spec, InverseFunctional::phi1, lambda);
                } else if (fs_which == "phi2G") {
                    r = bound_phi_inverse(spec, InverseFunctional::phi2, lambda);
                } else if (fs_which == "phi2G-composite") {
                    r = bound_phi_inverse(spec, InverseFunctional::phi2_composite, lambda);
                } else {
                    throw CLI::ValidationError("unknown --which '" + fs_which + "'");
                }
            }
            result = Json{{"which", fs_which}, {"lambda", to_json(lambda)}};
            result.update(to_json(r));
        } else if (sweep->parsed()) {
            cfg.spec_name = fam.preset;
            cfg.functional = parse_functional(functional);
            cfg.lambda = parse_complex(lambda_text);
            cfg.record_samples = !csv_path.empty();
            const SweepResult r = run_sweep(build_family(fam), cfg);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw CLI::ValidationError("cannot write '" + csv_path + "'");
                csv << sample_records_csv(r.records);
            }
            result = to_json(r);
        } else if (attain->parsed()) {
            result = to_json(check_attainment(build_family(fam), parse_functional(functional),
                                              parse_complex(lambda_text), witness, attain_grid));
        } else if (probe->parsed()) {
            result = to_json(rigidity_probe(build_family(fam), probe_coeff, probe_eps, probe_samples, probe_seed));
        }
        detail::emit(result, format, out);
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        const bool usage = e.name() == errc::malformed_complex || e.name() == errc::unknown_preset;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace coeffbody::cli
