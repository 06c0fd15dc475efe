#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mathverify/admissibility.hpp"
#include "mathverify/engine.hpp"
#include "mathverify/errors.hpp"

namespace fs = std::filesystem;
using namespace mathverify;

namespace {

struct GlobalFlags {
    int precision = 120;
    std::string lambda_min = "0.000001";
    std::string report_path;
    std::string format = "text";
};

void write_report_file(const std::string& path, const nlohmann::json& canonical) {
    std::ofstream out(path, std::ios::binary);
    out << canonical.dump(2) << "\n";
}

EngineOptions make_options(const GlobalFlags& flags) {
    EngineOptions options;
    options.precision = flags.precision;
    options.lambda_min = Rational::from_string(flags.lambda_min);
    return options;
}

void emit_single(const EvaluationReport& report, const GlobalFlags& flags) {
    if (flags.format == "json")
        std::cout << report_to_canonical_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    if (!flags.report_path.empty())
        write_report_file(flags.report_path, report_to_canonical_json(report));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for open-problem candidates"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--precision", flags.precision, "evaluation digits (default 120)");
    app.add_option("--lambda-min", flags.lambda_min,
                   "lower end of the certificate check range");
    app.add_option("--report", flags.report_path, "write a canonical report file");
    app.add_option("--format", flags.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string manifest_path, candidate_path, manifest_dir, candidates_dir, expr_path;

    auto* verify = app.add_subcommand("verify", "verify one candidate against one problem");
    verify->add_option("manifest", manifest_path)->required();
    verify->add_option("candidate", candidate_path)->required();

    auto* batch = app.add_subcommand("batch", "verify a directory of candidates");
    batch->add_option("manifest-dir", manifest_dir)->required();
    batch->add_option("candidate-dir", candidates_dir)->required();

    auto* check = app.add_subcommand("check-admissible",
                                     "structural admissibility of an expression file");
    check->add_option("expr-file", expr_path)->required();

    auto* prompt = app.add_subcommand("render-prompt", "print the problem prompt");
    prompt->add_option("manifest", manifest_path)->required();

    auto* list = app.add_subcommand("list", "list the problems in a manifest directory");
    list->add_option("manifest-dir", manifest_dir)->required();

    // global flags remain usable after a subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            ProblemManifest manifest = load_manifest(manifest_path);
            EvaluationReport report =
                run_verification(manifest, candidate_path, make_options(flags));
            emit_single(report, flags);
            return exit_code_for({report});
        }
        if (batch->parsed()) {
            BatchResult result =
                batch_run(manifest_dir, candidates_dir, make_options(flags));
            if (flags.format == "json") {
                std::cout << batch_to_canonical_json(result).dump(2) << "\n";
            } else {
                for (const auto& r : result.reports) std::cout << report_to_text(r);
                for (const auto& w : result.warnings)
                    std::cout << "warning: " << w << "\n";
                std::cout << "summary:";
                for (const auto& [verdict, count] : result.summary)
                    std::cout << " " << verdict << "=" << count;
                std::cout << "\n";
            }
            if (!flags.report_path.empty())
                write_report_file(flags.report_path, batch_to_canonical_json(result));
            return exit_code_for(result.reports);
        }
        if (check->parsed()) {
            std::ifstream in(expr_path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot open " << expr_path << "\n";
                return 4;
            }
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            ExprPtr expr = parse_expression(text);
            AdmissibilityReport report =
                check_admissibility(*expr, AdmissibilityPolicy::defaults());
            if (report.admissible) {
                std::cout << "admissible\n";
                return 0;
            }
            std::cout << "inadmissible\n";
            for (const auto& v : report.violations)
                std::cout << "  " << v.rule << " at " << v.node_path << ": " << v.message
                          << "\n";
            return 2;
        }
        if (prompt->parsed()) {
            std::cout << render_prompt(load_manifest(manifest_path));
            return 0;
        }
        if (list->parsed()) {
            std::vector<fs::path> paths;
            for (const auto& entry : fs::directory_iterator(manifest_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    paths.push_back(entry.path());
            std::sort(paths.begin(), paths.end());
            for (const auto& path : paths) {
                try {
                    ProblemManifest m = load_manifest(path);
                    std::cout << m.id << "  [" << mode_name(m.mode) << ", solvability "
                              << m.solvability << "]  " << m.title << "\n";
                } catch (const std::exception& e) {
                    std::cout << path.filename().string() << "  (unloadable: " << e.what()
                              << ")\n";
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
