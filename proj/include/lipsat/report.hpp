#pragma once

/// Plain-data analysis reports and their renderings.  Everything the CLI
/// prints — JSON, text, LaTeX — is produced from the structs in this file,
/// and the JSON form parses back losslessly (see report_from_json), which
/// the test suite uses to pin the schema.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lipsat/error.hpp"
#include "lipsat/saturation.hpp"
#include "lipsat/semigroup.hpp"
#include "lipsat/types.hpp"
#include "lipsat/witness.hpp"

namespace lipsat {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, text, latex };

// ---------------------------------------------------------------------------
// Request
// ---------------------------------------------------------------------------

struct AnalysisRequest {
    std::vector<Exponent> generators;
    std::optional<RingDescriptor> ring;
    std::optional<AlgebraKind> algebra_kind; // overrides / stands in for ring.algebra
    std::optional<int> r_override;
    bool validate = false;
    std::optional<Exponent> bound; // validation / exponent truncation bound
    int samples = 32;              // membership-witness sample size
};

// ---------------------------------------------------------------------------
// Report data (plain values only, so == and JSON round-trips are exact)
// ---------------------------------------------------------------------------

struct SemigroupSummary {
    std::vector<Exponent> generators;
    Exponent frobenius = -1;
    Exponent conductor = 0;
    Exponent gap_count = 0;
    std::vector<Exponent> gaps;
    std::vector<Exponent> partial_gcds;

    friend bool operator==(const SemigroupSummary&, const SemigroupSummary&) = default;
};

struct SaturationSummary {
    int r = 1;
    std::vector<std::vector<Exponent>> L;       // L[j-1] = L_j
    std::vector<std::vector<Exponent>> L_trunc; // truncated strata
    std::vector<std::vector<Exponent>> L_tilde; // L_tilde[m-2] = Lt(m)
    std::vector<Exponent> r_module_gaps;
    std::vector<Exponent> a_module_gaps;
    std::vector<Exponent> L_tilde_r;
    std::vector<Exponent> new_exponents;
    std::vector<Exponent> generators_full;
    std::vector<Exponent> generators_minimal;
    std::vector<Exponent> new_generators; // minimal generators outside the input semigroup
    SemigroupSummary saturated;
    bool is_saturated = true;

    friend bool operator==(const SaturationSummary&, const SaturationSummary&) = default;
};

struct HypothesesSummary {
    std::string ring;    // human-readable descriptor, empty if none given
    std::string algebra; // "polynomial" / "power_series" / "analytic" / "other" / ""
    std::string gamma1_nice = "not_checked";   // "true" / "false" / "not_checked"
    std::string gamma_b_closed = "not_checked"; // "true" / "unknown" / "not_checked"
    std::string noetherian = "assumed";

    friend bool operator==(const HypothesesSummary&, const HypothesesSummary&) = default;
};

struct CheckSummary {
    bool passed = true;
    long long checked = 0;
    std::string counterexample;

    friend bool operator==(const CheckSummary&, const CheckSummary&) = default;
};

struct ValidationReportData {
    Exponent bound = 0;
    bool descriptions_agree = true;
    long long exponents_compared = 0;
    CheckSummary membership_witnesses;
    CheckSummary filter_checks;
    CheckSummary stratum_witnesses;
    bool all_passed = true;

    friend bool operator==(const ValidationReportData&, const ValidationReportData&) = default;
};

struct AnalysisReport {
    int schema_version = kSchemaVersion;
    std::vector<Exponent> input_generators;
    SemigroupSummary semigroup;
    SaturationSummary saturation;
    HypothesesSummary hypotheses;
    std::optional<ValidationReportData> validation;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

namespace detail {

inline std::string tristate_string(Tristate t) {
    switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    case Tristate::unknown: return "unknown";
    }
    return "unknown";
}

inline std::string algebra_kind_string(AlgebraKind k) {
    switch (k) {
    case AlgebraKind::polynomial: return "polynomial";
    case AlgebraKind::power_series: return "power_series";
    case AlgebraKind::analytic: return "analytic";
    case AlgebraKind::other: return "other";
    }
    return "other";
}

inline std::string ring_string(const RingDescriptor& ring) {
    std::string out = ring.kind == RingKind::domain ? "domain" : "reduced";
    out += " (characteristic";
    if (ring.characteristics.size() != 1) out += "s";
    for (std::size_t i = 0; i < ring.characteristics.size(); ++i)
        out += (i ? ", " : " ") + std::to_string(ring.characteristics[i]);
    if (ring.characteristics.empty()) out += " unspecified";
    out += ")";
    return out;
}

} // namespace detail

inline SemigroupSummary summarize_semigroup(const NumericalSemigroup& s) {
    SemigroupSummary sum;
    sum.generators = s.generators();
    sum.frobenius = s.frobenius();
    sum.conductor = s.conductor();
    GapProfile gp = gaps(s);
    sum.gaps = std::move(gp.gaps);
    sum.gap_count = gp.count;
    sum.partial_gcds = partial_gcds(s);
    return sum;
}

/// Bound used for validation when the caller does not supply one: past the
/// saturated conductor by a full generator period, doubled for slack.
inline Exponent default_validation_bound(const SaturationReport& rep) {
    return checked_add(checked_mul(2, rep.saturated_semigroup.conductor()),
                       rep.base.generators().back());
}

/// Materializes the three descriptions of the saturation's exponents up to
/// `bound`, checks they agree, and runs the witness suite.
inline ValidationReportData run_validation(const NumericalSemigroup& s,
                                           const SaturationReport& rep, Exponent bound,
                                           int samples) {
    ValidationReportData data;
    data.bound = bound;

    const std::vector<Exponent> via_r = exponent_set(rep, Description::r_module, bound);
    const std::vector<Exponent> via_a = exponent_set(rep, Description::a_module, bound);
    const std::vector<Exponent> via_alg = exponent_set(rep, Description::algebra, bound);
    data.descriptions_agree = (via_r == via_a) && (via_a == via_alg);
    data.exponents_compared = static_cast<long long>(bound) + 1;

    const ValidationSummary w = cross_validate(s, rep, bound, samples);
    auto convert = [](const CheckResult& c) {
        return CheckSummary{c.passed, c.checked, c.counterexample};
    };
    data.membership_witnesses = convert(w.membership_witnesses);
    data.filter_checks = convert(w.filter_checks);
    data.stratum_witnesses = convert(w.stratum_witnesses);
    data.all_passed = data.descriptions_agree && w.all_passed();
    return data;
}

/// Full pipeline: normalize, saturate, summarize, optionally check the
/// standing hypotheses and cross-validate.  Throws `error` on invalid input.
inline AnalysisReport analyze(const AnalysisRequest& request) {
    AnalysisReport report;
    report.input_generators = request.generators;

    const NumericalSemigroup s = normalize_generators(request.generators);
    const SaturationReport sat = saturate(s, request.r_override);

    report.semigroup = summarize_semigroup(s);
    SaturationSummary& out = report.saturation;
    out.r = sat.r;
    out.L = sat.strata.L;
    out.L_trunc = sat.strata.L_trunc;
    out.L_tilde = sat.strata.L_tilde;
    out.r_module_gaps = sat.r_module_gaps;
    out.a_module_gaps = sat.a_module_gaps;
    out.L_tilde_r = sat.L_tilde_r;
    out.new_exponents = sat.new_exponents;
    out.generators_full = sat.algebra_generators_full;
    out.generators_minimal = sat.algebra_generators_minimal;
    for (Exponent e : sat.algebra_generators_minimal)
        if (std::find(s.generators().begin(), s.generators().end(), e) ==
            s.generators().end())
            out.new_generators.push_back(e);
    out.saturated = summarize_semigroup(sat.saturated_semigroup);
    out.is_saturated = sat.is_saturated;

    // Hypotheses: a ring descriptor enables the characteristic check; the
    // algebra kind alone still settles closedness.
    RingDescriptor effective;
    if (request.ring) effective = *request.ring;
    if (request.algebra_kind) effective.algebra = *request.algebra_kind;
    if (request.ring) {
        const HypothesisReport hyp = check_hypotheses(s, effective);
        report.hypotheses.ring = detail::ring_string(effective);
        report.hypotheses.gamma1_nice = detail::tristate_string(hyp.gamma1_nice);
        report.hypotheses.gamma_b_closed = detail::tristate_string(hyp.gamma_b_closed);
    } else if (request.algebra_kind) {
        const HypothesisReport hyp =
            check_hypotheses(s, RingDescriptor{RingKind::reduced, {}, effective.algebra});
        report.hypotheses.gamma_b_closed = detail::tristate_string(hyp.gamma_b_closed);
    }
    if (request.ring || request.algebra_kind)
        report.hypotheses.algebra = detail::algebra_kind_string(effective.algebra);

    if (request.validate) {
        const Exponent bound = request.bound ? *request.bound : default_validation_bound(sat);
        report.validation = run_validation(s, sat, bound, request.samples);
    }
    return report;
}

// ---------------------------------------------------------------------------
// JSON (keys sort alphabetically on dump; schema documented in docs/)
// ---------------------------------------------------------------------------

inline void to_json(json& j, const SemigroupSummary& s) {
    j = json{{"generators", s.generators}, {"frobenius", s.frobenius},
             {"conductor", s.conductor},   {"gap_count", s.gap_count},
             {"gaps", s.gaps},             {"partial_gcds", s.partial_gcds}};
}

inline void from_json(const json& j, SemigroupSummary& s) {
    j.at("generators").get_to(s.generators);
    j.at("frobenius").get_to(s.frobenius);
    j.at("conductor").get_to(s.conductor);
    j.at("gap_count").get_to(s.gap_count);
    j.at("gaps").get_to(s.gaps);
    j.at("partial_gcds").get_to(s.partial_gcds);
}

inline void to_json(json& j, const SaturationSummary& s) {
    j = json{{"r", s.r},
             {"L", s.L},
             {"L_trunc", s.L_trunc},
             {"L_tilde", s.L_tilde},
             {"r_module_gaps", s.r_module_gaps},
             {"a_module_gaps", s.a_module_gaps},
             {"L_tilde_r", s.L_tilde_r},
             {"new_exponents", s.new_exponents},
             {"generators_full", s.generators_full},
             {"generators_minimal", s.generators_minimal},
             {"new_generators", s.new_generators},
             {"saturated", s.saturated},
             {"is_saturated", s.is_saturated}};
}

inline void from_json(const json& j, SaturationSummary& s) {
    j.at("r").get_to(s.r);
    j.at("L").get_to(s.L);
    j.at("L_trunc").get_to(s.L_trunc);
    j.at("L_tilde").get_to(s.L_tilde);
    j.at("r_module_gaps").get_to(s.r_module_gaps);
    j.at("a_module_gaps").get_to(s.a_module_gaps);
    j.at("L_tilde_r").get_to(s.L_tilde_r);
    j.at("new_exponents").get_to(s.new_exponents);
    j.at("generators_full").get_to(s.generators_full);
    j.at("generators_minimal").get_to(s.generators_minimal);
    j.at("new_generators").get_to(s.new_generators);
    j.at("saturated").get_to(s.saturated);
    j.at("is_saturated").get_to(s.is_saturated);
}

inline void to_json(json& j, const HypothesesSummary& h) {
    j = json{{"ring", h.ring},
             {"algebra", h.algebra},
             {"gamma1_nice", h.gamma1_nice},
             {"gamma_b_closed", h.gamma_b_closed},
             {"noetherian", h.noetherian}};
}

inline void from_json(const json& j, HypothesesSummary& h) {
    j.at("ring").get_to(h.ring);
    j.at("algebra").get_to(h.algebra);
    j.at("gamma1_nice").get_to(h.gamma1_nice);
    j.at("gamma_b_closed").get_to(h.gamma_b_closed);
    j.at("noetherian").get_to(h.noetherian);
}

inline void to_json(json& j, const CheckSummary& c) {
    j = json{{"passed", c.passed}, {"checked", c.checked},
             {"counterexample", c.counterexample}};
}

inline void from_json(const json& j, CheckSummary& c) {
    j.at("passed").get_to(c.passed);
    j.at("checked").get_to(c.checked);
    j.at("counterexample").get_to(c.counterexample);
}

inline void to_json(json& j, const ValidationReportData& v) {
    j = json{{"bound", v.bound},
             {"descriptions_agree", v.descriptions_agree},
             {"exponents_compared", v.exponents_compared},
             {"membership_witnesses", v.membership_witnesses},
             {"filter_checks", v.filter_checks},
             {"stratum_witnesses", v.stratum_witnesses},
             {"all_passed", v.all_passed}};
}

inline void from_json(const json& j, ValidationReportData& v) {
    j.at("bound").get_to(v.bound);
    j.at("descriptions_agree").get_to(v.descriptions_agree);
    j.at("exponents_compared").get_to(v.exponents_compared);
    j.at("membership_witnesses").get_to(v.membership_witnesses);
    j.at("filter_checks").get_to(v.filter_checks);
    j.at("stratum_witnesses").get_to(v.stratum_witnesses);
    j.at("all_passed").get_to(v.all_passed);
}

inline void to_json(json& j, const AnalysisReport& r) {
    j = json{{"schema_version", r.schema_version},
             {"input_generators", r.input_generators},
             {"semigroup", r.semigroup},
             {"saturation", r.saturation},
             {"hypotheses", r.hypotheses}};
    j["validation"] = r.validation ? json(*r.validation) : json(nullptr);
}

inline void from_json(const json& j, AnalysisReport& r) {
    j.at("schema_version").get_to(r.schema_version);
    j.at("input_generators").get_to(r.input_generators);
    j.at("semigroup").get_to(r.semigroup);
    j.at("saturation").get_to(r.saturation);
    j.at("hypotheses").get_to(r.hypotheses);
    if (j.contains("validation") && !j.at("validation").is_null())
        r.validation = j.at("validation").get<ValidationReportData>();
    else
        r.validation.reset();
}

inline std::string report_to_json_string(const AnalysisReport& r) {
    return json(r).dump(2) + "\n";
}

inline AnalysisReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    try {
        AnalysisReport r = j.get<AnalysisReport>();
        if (r.schema_version != kSchemaVersion)
            throw error(errc::parse_error,
                        "unsupported schema_version " + std::to_string(r.schema_version),
                        r.schema_version);
        return r;
    } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("report shape mismatch: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Text / LaTeX rendering
// ---------------------------------------------------------------------------

namespace detail {

inline std::string join(const std::vector<Exponent>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string fmt_set(const std::vector<Exponent>& v) {
    return "{" + join(v, ", ") + "}";
}

inline std::string fmt_gens(const std::vector<Exponent>& v) {
    return "<" + join(v, ", ") + ">";
}

inline std::string latex_set(const std::vector<Exponent>& v) {
    if (v.empty()) return "\\emptyset";
    return "\\{" + join(v, ", ") + "\\}";
}

inline std::string latex_gens(const std::vector<Exponent>& v) {
    return "\\langle " + join(v, ", ") + " \\rangle";
}

/// "A[t^{15}, t^{23}]" — or plain "A" when nothing is adjoined.
inline std::string algebra_display(const std::vector<Exponent>& new_gens) {
    if (new_gens.empty()) return "A";
    std::string out = "A[";
    for (std::size_t i = 0; i < new_gens.size(); ++i) {
        if (i) out += ", ";
        out += "t^{" + std::to_string(new_gens[i]) + "}";
    }
    return out + "]";
}

inline std::string check_line(const char* name, const CheckSummary& c) {
    std::string out = std::string(name) + ": " + (c.passed ? "pass" : "FAIL") + " (" +
                      std::to_string(c.checked) + " checked";
    if (!c.counterexample.empty()) out += "; counterexample: " + c.counterexample;
    return out + ")";
}

} // namespace detail

inline std::string render_text(const AnalysisReport& r) {
    using namespace detail;
    const SemigroupSummary& s = r.semigroup;
    const SaturationSummary& sat = r.saturation;
    std::string out;
    out += "input generators    : " + join(r.input_generators, " ") + "\n";
    out += "semigroup           : " + fmt_gens(s.generators) + "\n";
    out += "frobenius           : " + std::to_string(s.frobenius) + "\n";
    out += "conductor           : " + std::to_string(s.conductor) + "\n";
    out += "gap count           : " + std::to_string(s.gap_count) + "\n";
    out += "gaps                : " + fmt_set(s.gaps) + "\n";
    out += "partial gcds        : (" + join(s.partial_gcds, ", ") + ")\n";
    out += "saturation index r  : " + std::to_string(sat.r) + "\n";
    for (std::size_t j = 1; j <= sat.L.size(); ++j) {
        out += "L_" + std::to_string(j) + "                 : " + fmt_set(sat.L[j - 1]) + "\n";
        out += "L_" + std::to_string(j) + " truncated       : " +
               fmt_set(sat.L_trunc[j - 1]) + "\n";
    }
    for (std::size_t m = 2; m <= sat.L_tilde.size() + 1; ++m)
        out += "L~(" + std::to_string(m) + ")               : " +
               fmt_set(sat.L_tilde[m - 2]) + "\n";
    out += "new exponents       : " + fmt_set(sat.new_exponents) + "\n";
    out += "full generators     : " + fmt_set(sat.generators_full) + "\n";
    out += "minimal generators  : " + fmt_set(sat.generators_minimal) + "\n";
    out += "saturated semigroup : " + fmt_gens(sat.saturated.generators) + "\n";
    out += "saturated frobenius : " + std::to_string(sat.saturated.frobenius) + "\n";
    out += "is saturated        : " + std::string(sat.is_saturated ? "yes" : "no") + "\n";
    out += "saturation          : A*_{B,R} = " + algebra_display(sat.new_generators) + "\n";
    if (!r.hypotheses.ring.empty())
        out += "ring                : " + r.hypotheses.ring + "\n";
    if (!r.hypotheses.algebra.empty())
        out += "ambient algebra     : " + r.hypotheses.algebra + "\n";
    out += "hypotheses          : gamma1_nice=" + r.hypotheses.gamma1_nice +
           " gamma_b_closed=" + r.hypotheses.gamma_b_closed +
           " noetherian=" + r.hypotheses.noetherian + "\n";
    if (r.validation) {
        const ValidationReportData& v = *r.validation;
        out += "validation bound    : " + std::to_string(v.bound) + "\n";
        out += "descriptions agree  : " + std::string(v.descriptions_agree ? "yes" : "NO") +
               " (" + std::to_string(v.exponents_compared) + " exponents)\n";
        out += "  " + check_line("membership witnesses", v.membership_witnesses) + "\n";
        out += "  " + check_line("filter checks       ", v.filter_checks) + "\n";
        out += "  " + check_line("stratum witnesses   ", v.stratum_witnesses) + "\n";
        out += "validation          : " + std::string(v.all_passed ? "pass" : "FAIL") + "\n";
    }
    return out;
}

inline std::string render_latex(const AnalysisReport& r) {
    using namespace detail;
    const SemigroupSummary& s = r.semigroup;
    const SaturationSummary& sat = r.saturation;
    std::string out;
    out += "% saturation of the monomial curve algebra with exponent semigroup " +
           fmt_gens(s.generators) + "\n";
    out += "\\begin{itemize}\n";
    out += "  \\item $\\Gamma = " + latex_gens(s.generators) + "$, $g(\\Gamma) = " +
           std::to_string(s.frobenius) + "$, $c(\\Gamma) = " + std::to_string(s.conductor) +
           "$\n";
    out += "  \\item $G(\\Gamma) = " + latex_set(s.gaps) + "$\n";
    out += "  \\item $(d_1, \\ldots, d_" + std::to_string(s.partial_gcds.size()) +
           ") = (" + join(s.partial_gcds, ", ") + ")$, $r = " + std::to_string(sat.r) +
           "$\n";
    for (std::size_t j = 1; j <= sat.L.size(); ++j) {
        out += "  \\item $L_" + std::to_string(j) + " = " + latex_set(sat.L[j - 1]) +
               "$, $\\mathcal{L}_" + std::to_string(j) + " = " +
               latex_set(sat.L_trunc[j - 1]) + "$\n";
    }
    out += "  \\item $\\tilde{L}(" + std::to_string(sat.r) + ") = " +
           latex_set(sat.L_tilde_r) + "$\n";
    out += "  \\item $\\mathcal{L}(" + std::to_string(sat.r) + ") = " +
           latex_set(sat.new_exponents) + "$\n";
    out += "  \\item $\\Gamma^* = " + latex_gens(sat.saturated.generators) + "$\n";
    if (!r.hypotheses.ring.empty() || !r.hypotheses.algebra.empty())
        out += "  \\item hypotheses: $\\gamma_1$-nice: " + r.hypotheses.gamma1_nice +
               "; closedness: " + r.hypotheses.gamma_b_closed +
               "; noetherian: " + r.hypotheses.noetherian + "\n";
    out += "\\end{itemize}\n";
    out += "\\[ A^*_{B,R} = " + algebra_display(sat.new_generators) + " \\]\n";
    if (r.validation)
        out += std::string("% validation: ") + (r.validation->all_passed ? "pass" : "FAIL") +
               " (bound " + std::to_string(r.validation->bound) + ")\n";
    return out;
}

inline std::string render_report(const AnalysisReport& r, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::json: return report_to_json_string(r);
    case OutputFormat::text: return render_text(r);
    case OutputFormat::latex: return render_latex(r);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Standalone verification report (CLI `verify`)
// ---------------------------------------------------------------------------

inline std::string render_validation_text(const std::vector<Exponent>& generators,
                                          const ValidationReportData& v) {
    using namespace detail;
    std::string out;
    out += "semigroup           : " + fmt_gens(generators) + "\n";
    out += "validation bound    : " + std::to_string(v.bound) + "\n";
    out += "descriptions agree  : " + std::string(v.descriptions_agree ? "yes" : "NO") +
           " (" + std::to_string(v.exponents_compared) + " exponents)\n";
    out += "  " + check_line("membership witnesses", v.membership_witnesses) + "\n";
    out += "  " + check_line("filter checks       ", v.filter_checks) + "\n";
    out += "  " + check_line("stratum witnesses   ", v.stratum_witnesses) + "\n";
    out += "result              : " + std::string(v.all_passed ? "pass" : "FAIL") + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Batch input
// ---------------------------------------------------------------------------

/// Splits a batch line into generators.  Tokens are separated by spaces,
/// tabs and/or commas.  Throws parse_error on anything non-numeric.
inline std::vector<Exponent> parse_generator_list(const std::string& line) {
    std::vector<Exponent> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &pos);
        } catch (const std::exception&) {
            throw error(errc::parse_error, "not an integer: '" + token + "'");
        }
        if (pos != token.size())
            throw error(errc::parse_error, "not an integer: '" + token + "'");
        out.push_back(static_cast<Exponent>(value));
        token.clear();
    };
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == ',' || c == '\r')
            flush();
        else
            token += c;
    }
    flush();
    return out;
}

struct BatchEntryResult {
    int line_number = 0;
    std::string input;
    std::optional<AnalysisReport> report;
    std::string error_code;    // errc_name, empty on success
    std::string error_message; // empty on success
};

struct BatchReport {
    int schema_version = kSchemaVersion;
    std::vector<BatchEntryResult> entries;
    long long total = 0;
    long long succeeded = 0;
    long long failed = 0;
    long long saturated_count = 0;
};

/// Runs one analysis per non-comment line of `text`.  `template_request`
/// supplies the shared flags (ring, validation, ...); its generator list is
/// ignored.  A failing line becomes an error entry; later lines still run.
inline BatchReport run_batch(const std::string& text, const AnalysisRequest& template_request) {
    BatchReport batch;
    std::size_t start = 0;
    int line_number = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;
        if (start > text.size() && line.empty()) break; // no trailing empty line entry

        // strip comments; skip blank lines
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        BatchEntryResult entry;
        entry.line_number = line_number;
        entry.input = line;
        try {
            AnalysisRequest req = template_request;
            req.generators = parse_generator_list(line);
            entry.report = analyze(req);
            ++batch.succeeded;
            if (entry.report->saturation.is_saturated) ++batch.saturated_count;
        } catch (const error& e) {
            entry.error_code = errc_name(e.code());
            entry.error_message = e.what();
            ++batch.failed;
        }
        ++batch.total;
        batch.entries.push_back(std::move(entry));
    }
    return batch;
}

inline void to_json(json& j, const BatchEntryResult& e) {
    j = json{{"line", e.line_number},
             {"input", e.input},
             {"error_code", e.error_code},
             {"error_message", e.error_message}};
    j["report"] = e.report ? json(*e.report) : json(nullptr);
}

inline void to_json(json& j, const BatchReport& b) {
    j = json{{"schema_version", b.schema_version},
             {"entries", b.entries},
             {"summary", json{{"total", b.total},
                              {"succeeded", b.succeeded},
                              {"failed", b.failed},
                              {"saturated", b.saturated_count}}}};
}

inline std::string render_batch(const BatchReport& batch, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return json(batch).dump(2) + "\n";
    std::string out;
    const char* comment = fmt == OutputFormat::latex ? "% " : "";
    for (const BatchEntryResult& e : batch.entries) {
        out += std::string(comment) + "== line " + std::to_string(e.line_number) + ": " +
               e.input + "\n";
        if (e.report)
            out += fmt == OutputFormat::latex ? render_latex(*e.report)
                                              : render_text(*e.report);
        else
            out += std::string(comment) + "error (" + e.error_code + "): " +
                   e.error_message + "\n";
    }
    out += std::string(comment) + "summary: total=" + std::to_string(batch.total) +
           " succeeded=" + std::to_string(batch.succeeded) +
           " failed=" + std::to_string(batch.failed) +
           " saturated=" + std::to_string(batch.saturated_count) + "\n";
    return out;
}

} // namespace lipsat
