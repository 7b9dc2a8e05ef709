#pragma once

// Complex literals and JSON encodings of the library's result types.
//
// Literal grammar: a, bi, a+bi, a-bi (also i, -i, a+i). Printing uses 17
// significant digits, so parse(format(z)) == z for every finite z.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "coeffbody/bounds.hpp"
#include "coeffbody/error.hpp"
#include "coeffbody/schur.hpp"
#include "coeffbody/series.hpp"
#include "coeffbody/verify.hpp"

namespace coeffbody {

using Json = nlohmann::ordered_json;

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
        if (!s.empty() && s.front() == '-') s = {};  // "+-1"
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw DomainError(errc::malformed_complex, "cannot parse '" + std::string(whole) + "' as a complex number");
    }
    return v;
}

inline std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline Complex parse_complex(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw DomainError(errc::malformed_complex, "empty complex literal");
    if (s.back() != 'i') return {detail::parse_real(s, text), 0.0};
    s.remove_suffix(1);
    // split at the last sign that is not the leading sign or an exponent sign
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
    std::string_view im = split == std::string_view::npos ? s : s.substr(split);
    double imag = 0.0;
    if (im.empty() || im == "+") {
        imag = 1.0;
    } else if (im == "-") {
        imag = -1.0;
    } else {
        imag = detail::parse_real(im, text);
    }
    return {re.empty() ? 0.0 : detail::parse_real(re, text), imag};
}

inline std::string format_complex(Complex z) {
    std::string out = detail::format_real(z.real());
    if (z.imag() != 0.0) {
        if (!std::signbit(z.imag())) out += '+';
        out += detail::format_real(z.imag());
        out += 'i';
    }
    return out;
}

/// Comma-separated complex list.
inline std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_complex(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json to_json(std::span<const Complex> v) {
    Json a = Json::array();
    for (Complex z : v) a.push_back(to_json(z));
    return a;
}

inline Json to_json(const TruncatedSeries& s) { return to_json(s.coeffs()); }

inline Json to_json(const SchurSequence& s) {
    Json j{{"gammas", to_json(std::span<const Complex>(s.gammas))}};
    j["terminated_at"] = s.terminated_at ? Json(*s.terminated_at) : Json(nullptr);
    j["self_map"] = s.self_map;
    return j;
}

inline Json to_json(const BlaschkeWitness& w) {
    Json j{{"kind", witness_kind_name(w)}};
    if (const auto* r = std::get_if<Rotation>(&w)) {
        j["theta"] = r->theta;
    } else if (const auto* q = std::get_if<SquaredRotation>(&w)) {
        j["theta"] = q->theta;
    } else {
        const auto& d = std::get<Degree2>(w);
        j["gamma1"] = to_json(d.gamma1);
        j["theta"] = d.theta;
    }
    return j;
}

inline Json to_json(const DiskRange& d) { return Json{{"center", to_json(d.center)}, {"radius", d.radius}}; }

inline Json to_json(const BoundReport& r) {
    return Json{{"value", r.value},
                {"branch", r.branch},
                {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
                {"sharp", r.sharp}};
}

inline Json to_json(const SweepResult& r) {
    return Json{{"spec", r.spec_name},
                {"functional", r.functional},
                {"lambda", to_json(r.lambda)},
                {"seed", r.seed},
                {"samples", r.samples},
                {"witness_evaluations", r.witness_evaluations},
                {"skipped", r.skipped},
                {"empirical_sup", r.empirical_sup},
                {"bound_value", r.bound_value},
                {"bound_source", r.bound_source},
                {"sharp", r.sharp},
                {"violation_count", r.violation_count},
                {"max_excess", r.max_excess},
                {"attainment_gap", r.attainment_gap},
                {"argmax_source", r.argmax_source},
                {"argmax_witness", to_json(r.argmax_witness)},
                {"runtime_ms", r.runtime_ms}};
}

inline Json to_json(const AttainmentRecord& r) {
    return Json{{"functional", r.functional},
                {"witness_kind", r.witness_kind},
                {"max_value", r.max_value},
                {"bound_value", r.bound_value},
                {"gap", r.gap},
                {"relative_gap", r.relative_gap},
                {"attained", r.attained},
                {"argmax", r.argmax ? to_json(*r.argmax) : Json(nullptr)},
                {"evaluations", r.evaluations},
                {"circle_residual", r.circle_residual ? Json(*r.circle_residual) : Json(nullptr)}};
}

inline Json to_json(const RigidityReport& r) {
    return Json{{"coefficient", r.coefficient},
                {"epsilon", r.epsilon},
                {"samples", r.samples},
                {"hits", r.hits},
                {"max_delta", r.max_delta},
                {"delta_bound", r.delta_bound},
                {"scaling", r.scaling},
                {"interior_points", r.interior_points},
                {"interior_min_delta", r.interior_min_delta},
                {"consistent", r.consistent}};
}

/// One CSV line per sample record: index,source,value,excess,γ_1;γ_2;...
inline std::string sample_records_csv(const std::vector<SampleRecord>& records) {
    std::string out = "index,source,value,excess,gammas\n";
    for (const auto& r : records) {
        out += std::to_string(r.index) + ',' + r.source + ',' + detail::format_real(r.value) + ',' +
               detail::format_real(r.excess) + ',';
        for (std::size_t k = 0; k < r.gammas.gammas.size(); ++k) {
            if (k) out += ';';
            out += format_complex(r.gammas.gammas[k]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace coeffbody
