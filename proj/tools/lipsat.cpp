// Command-line front end: analyze / batch / verify / gaps.
//
// Exit codes (also listed in the README):
//   0  success (for batch: every entry succeeded; for verify: all checks pass)
//   1  failure without a more specific code (failed verification, failed
//      batch entries, invalid generator values, internal inconsistencies)
//   2  usage or parse errors (bad flags, malformed numbers, bad ring syntax)
//   3  generators with a common divisor > 1
//   4  saturation index override out of range
//   5  output path cannot be written
//   6  invalid characteristic list
//   7  input file not found
//   8  empty generator list
//   9  arithmetic overflow / input out of supported range
//  10  truncation bound below the saturated conductor

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lipsat/lipsat.hpp>

namespace {

int exit_code_for(lipsat::errc c) {
    using lipsat::errc;
    switch (c) {
    case errc::parse_error: return 2;
    case errc::non_coprime: return 3;
    case errc::invalid_r_override: return 4;
    case errc::unwritable_output: return 5;
    case errc::invalid_characteristic: return 6;
    case errc::file_not_found: return 7;
    case errc::empty_input: return 8;
    case errc::overflow: return 9;
    case errc::bound_too_small: return 10;
    default: return 1;
    }
}

lipsat::OutputFormat parse_format(const std::string& text) {
    if (text == "json") return lipsat::OutputFormat::json;
    if (text == "text") return lipsat::OutputFormat::text;
    if (text == "latex") return lipsat::OutputFormat::latex;
    throw lipsat::error(lipsat::errc::parse_error,
                        "unknown format '" + text + "' (expected json, text or latex)");
}

lipsat::AlgebraKind parse_algebra(const std::string& text) {
    if (text == "poly") return lipsat::AlgebraKind::polynomial;
    if (text == "powerseries") return lipsat::AlgebraKind::power_series;
    if (text == "analytic") return lipsat::AlgebraKind::analytic;
    if (text == "other") return lipsat::AlgebraKind::other;
    throw lipsat::error(lipsat::errc::parse_error,
                        "unknown algebra kind '" + text +
                            "' (expected poly, powerseries, analytic or other)");
}

// "--ring domain:0" or "--ring reduced:2,5"
lipsat::RingDescriptor parse_ring(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    lipsat::RingDescriptor ring;
    if (kind == "domain")
        ring.kind = lipsat::RingKind::domain;
    else if (kind == "reduced")
        ring.kind = lipsat::RingKind::reduced;
    else
        throw lipsat::error(lipsat::errc::parse_error,
                            "unknown ring kind '" + kind +
                                "' (expected domain:<char> or reduced:<chars>)");
    if (colon == std::string::npos || colon + 1 >= text.size())
        throw lipsat::error(lipsat::errc::parse_error,
                            "missing characteristic list in --ring value '" + text + "'");
    ring.characteristics = lipsat::parse_generator_list(text.substr(colon + 1));
    return ring;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw lipsat::error(lipsat::errc::unwritable_output,
                            "cannot open '" + path + "' for writing");
    file << content;
    file.flush();
    if (!file.good())
        throw lipsat::error(lipsat::errc::unwritable_output,
                            "failed while writing '" + path + "'");
}

std::string read_input_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw lipsat::error(lipsat::errc::file_not_found,
                            "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

// Flags shared by the subcommands; each holds its own copy.
struct CommonFlags {
    std::string format = "text";
    std::string output;

    void attach(CLI::App& cmd) {
        cmd.add_option("--format", format, "output format: json, text or latex")
            ->capture_default_str();
        cmd.add_option("--output", output, "write the report to this file instead of stdout");
    }
};

struct RequestFlags {
    std::string ring;
    std::string algebra;
    int r_override = 0;
    long long bound = 0;
    bool validate = false;
    int samples = 32;
    bool have_r = false;
    bool have_bound = false;

    void attach(CLI::App& cmd) {
        cmd.add_option("--ring", ring,
                       "base ring: domain:<char> or reduced:<char,char,...>");
        cmd.add_option("--algebra", algebra,
                       "ambient algebra kind: poly, powerseries, analytic or other");
        cmd.add_option("--r", r_override, "force a saturation index (>= the intrinsic one)")
            ->each([this](const std::string&) { have_r = true; });
        cmd.add_option("--bound", bound, "truncation bound for validation")
            ->each([this](const std::string&) { have_bound = true; });
        cmd.add_flag("--validate", validate,
                     "cross-check the result with the witness suite");
        cmd.add_option("--samples", samples, "membership witnesses to sample")
            ->capture_default_str();
    }

    lipsat::AnalysisRequest to_request(const std::vector<long long>& generators) const {
        lipsat::AnalysisRequest req;
        req.generators.assign(generators.begin(), generators.end());
        if (!ring.empty()) req.ring = parse_ring(ring);
        if (!algebra.empty()) req.algebra_kind = parse_algebra(algebra);
        if (have_r) req.r_override = r_override;
        if (have_bound) req.bound = bound;
        req.validate = validate;
        req.samples = samples;
        return req;
    }
};

std::string prefix_lines(const std::string& text, const std::string& prefix) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size() - 1;
        out += prefix + text.substr(start, end - start) + "\n";
        start = end + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz saturation of monomial curve algebras from semigroup generators"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "saturate the algebra attached to one generator list");
    std::vector<long long> analyze_gens;
    analyze_cmd->add_option("generators", analyze_gens, "semigroup generators")
        ->required()
        ->expected(-1);
    CommonFlags analyze_common;
    RequestFlags analyze_flags;
    analyze_common.attach(*analyze_cmd);
    analyze_flags.attach(*analyze_cmd);

    // batch
    auto* batch_cmd =
        app.add_subcommand("batch", "run one analysis per line of an input file");
    std::string batch_path;
    batch_cmd->add_option("file", batch_path, "input file: one generator list per line")
        ->required();
    CommonFlags batch_common;
    RequestFlags batch_flags;
    batch_common.attach(*batch_cmd);
    batch_flags.attach(*batch_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "re-derive a saturation by independent routes and report agreement");
    std::vector<long long> verify_gens;
    verify_cmd->add_option("generators", verify_gens, "semigroup generators")
        ->required()
        ->expected(-1);
    CommonFlags verify_common;
    long long verify_bound = 0;
    bool verify_have_bound = false;
    int verify_samples = 32;
    verify_common.attach(*verify_cmd);
    verify_cmd->add_option("--bound", verify_bound, "truncation bound for the comparison")
        ->each([&](const std::string&) { verify_have_bound = true; });
    verify_cmd->add_option("--samples", verify_samples, "membership witnesses to sample")
        ->capture_default_str();

    // gaps
    auto* gaps_cmd =
        app.add_subcommand("gaps", "print the gap profile of a numerical semigroup");
    std::vector<long long> gaps_gens;
    gaps_cmd->add_option("generators", gaps_gens, "semigroup generators")
        ->required()
        ->expected(-1);
    CommonFlags gaps_common;
    gaps_common.attach(*gaps_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze_cmd) {
            const lipsat::AnalysisReport report =
                lipsat::analyze(analyze_flags.to_request(analyze_gens));
            write_output(analyze_common.output,
                         lipsat::render_report(report, parse_format(analyze_common.format)));
            return 0;
        }

        if (*batch_cmd) {
            if (!std::filesystem::exists(batch_path))
                throw lipsat::error(lipsat::errc::file_not_found,
                                    "no such file: '" + batch_path + "'");
            const std::string text = read_input_file(batch_path);
            const lipsat::BatchReport batch =
                lipsat::run_batch(text, batch_flags.to_request({}));
            write_output(batch_common.output,
                         lipsat::render_batch(batch, parse_format(batch_common.format)));
            return batch.failed == 0 ? 0 : 1;
        }

        if (*verify_cmd) {
            const lipsat::OutputFormat fmt = parse_format(verify_common.format);
            std::vector<lipsat::Exponent> gens(verify_gens.begin(), verify_gens.end());
            const lipsat::NumericalSemigroup s = lipsat::normalize_generators(gens);
            const lipsat::SaturationReport sat = lipsat::saturate(s);
            const lipsat::Exponent bound =
                verify_have_bound ? verify_bound : lipsat::default_validation_bound(sat);
            const lipsat::ValidationReportData data =
                lipsat::run_validation(s, sat, bound, verify_samples);

            std::string rendered;
            if (fmt == lipsat::OutputFormat::json) {
                lipsat::json j{{"schema_version", lipsat::kSchemaVersion},
                               {"generators", s.generators()},
                               {"validation", data}};
                rendered = j.dump(2) + "\n";
            } else {
                rendered = lipsat::render_validation_text(s.generators(), data);
                if (fmt == lipsat::OutputFormat::latex)
                    rendered = prefix_lines(rendered, "% ");
            }
            write_output(verify_common.output, rendered);
            return data.all_passed ? 0 : 1;
        }

        if (*gaps_cmd) {
            const lipsat::OutputFormat fmt = parse_format(gaps_common.format);
            std::vector<lipsat::Exponent> gens(gaps_gens.begin(), gaps_gens.end());
            const lipsat::SemigroupSummary summary =
                lipsat::summarize_semigroup(lipsat::normalize_generators(gens));

            std::string rendered;
            if (fmt == lipsat::OutputFormat::json) {
                lipsat::json j{{"schema_version", lipsat::kSchemaVersion},
                               {"semigroup", summary}};
                rendered = j.dump(2) + "\n";
            } else if (fmt == lipsat::OutputFormat::latex) {
                rendered += "\\begin{itemize}\n";
                rendered += "  \\item $\\Gamma = \\langle " +
                            lipsat::detail::join(summary.generators, ", ") +
                            " \\rangle$\n";
                rendered += "  \\item $g(\\Gamma) = " + std::to_string(summary.frobenius) +
                            "$, $c(\\Gamma) = " + std::to_string(summary.conductor) + "$\n";
                rendered += "  \\item $G(\\Gamma) = " +
                            lipsat::detail::latex_set(summary.gaps) + "$\n";
                rendered += "\\end{itemize}\n";
            } else {
                rendered += "semigroup : <" + lipsat::detail::join(summary.generators, ", ") +
                            ">\n";
                rendered += "frobenius : " + std::to_string(summary.frobenius) + "\n";
                rendered += "conductor : " + std::to_string(summary.conductor) + "\n";
                rendered += "gap count : " + std::to_string(summary.gap_count) + "\n";
                rendered += "gaps      : " + lipsat::detail::fmt_set(summary.gaps) + "\n";
            }
            write_output(gaps_common.output, rendered);
            return 0;
        }
    } catch (const lipsat::error& e) {
        std::cerr << "lipsat: error (" << lipsat::errc_name(e.code()) << "): " << e.what()
                  << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "lipsat: unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 1; // unreachable: a subcommand is required
}
