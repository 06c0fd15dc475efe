#include "mathverify/engine.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "mathverify/errors.hpp"
#include "mathverify/evaluate.hpp"
#include "mathverify/kakeya.hpp"

namespace mathverify {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CandidateError("cannot open candidate file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json parse_candidate_json(const std::string& bytes) {
    try {
        return nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw CandidateError(std::string("candidate is not valid JSON: ") + e.what());
    }
}

long long require_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw CandidateError(what + " must be an integer");
    return j.get<long long>();
}

IntMatrix parse_int_matrix(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw CandidateError(what + " must be an array of rows");
    IntMatrix rows;
    for (const auto& rj : j) {
        if (!rj.is_array()) throw CandidateError(what + " rows must be arrays");
        std::vector<long long> row;
        for (const auto& v : rj) row.push_back(require_int(v, what + " entry"));
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational json_number_to_rational(const nlohmann::json& v, const std::string& what) {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
        // route through the literal spelling to stay exact
        return Rational::from_string(v.dump());
    }
    throw CandidateError(what + " must be a decimal string or number");
}

long param_or(const nlohmann::json& params, const char* key, long fallback) {
    if (params.is_object() && params.contains(key)) {
        if (!params[key].is_number_integer())
            throw ManifestError(std::string("validator parameter '") + key +
                                "' must be an integer");
        return params[key].get<long>();
    }
    return fallback;
}

void fill_score(EvaluationReport& report, const ScoreResult& score,
                const std::optional<Rational>& metric) {
    report.verdict = score.verdict;
    for (const auto& d : score.diagnostics) report.diagnostics.push_back(d);
    if (metric) {
        report.metric = metric->to_string();
        report.metric_decimal = BigFloat::from_rational(*metric, 20).to_decimal();
    }
    if (score.relative_improvement)
        report.relative_improvement =
            BigFloat::from_rational(*score.relative_improvement, 10).to_decimal();
}

void run_ground_truth(const ProblemManifest& manifest, const std::string& bytes,
                      const EngineOptions& options, EvaluationReport& report) {
    ExprPtr expr = parse_expression(bytes);
    GroundTruthResult result = verify_ground_truth(*manifest.ground_truth, *expr,
                                                   manifest.admissibility,
                                                   options.precision);
    report.verdict = result.verdict;
    report.matched_digits = result.matched;
    if (!result.matched.empty())
        report.matched_digits_min =
            *std::min_element(result.matched.begin(), result.matched.end());
    for (const auto& d : result.diagnostics) report.diagnostics.push_back(d);
}

void run_dts(const ProblemManifest& manifest, const nlohmann::json& candidate,
             EvaluationReport& report) {
    const long n = param_or(manifest.validator_params, "n", 0);
    const long k = param_or(manifest.validator_params, "k", 0);
    if (n < 1 || k < 1)
        throw ManifestError("dts validator needs positive 'n' and 'k' parameters");
    if (!candidate.is_object() || !candidate.contains("rows"))
        throw CandidateError("DTS candidate needs a 'rows' field");
    if (candidate.contains("n") && require_int(candidate["n"], "n") != n)
        throw CandidateError("candidate 'n' does not match the problem");
    if (candidate.contains("k") && require_int(candidate["k"], "k") != k)
        throw CandidateError("candidate 'k' does not match the problem");
    ValidationOutcome outcome = validate_dts(static_cast<int>(n), static_cast<int>(k),
                                             parse_int_matrix(candidate["rows"], "rows"));
    fill_score(report, score_against_baseline(outcome, *manifest.baseline),
               outcome.metric);
}

void run_kakeya(const ProblemManifest& manifest, const nlohmann::json& candidate,
                EvaluationReport& report) {
    KakeyaInstance instance;
    instance.slope_count =
        static_cast<int>(param_or(manifest.validator_params, "slope_count", 128));
    if (!candidate.is_object() || !candidate.contains("intercepts") ||
        !candidate["intercepts"].is_array())
        throw CandidateError("Kakeya candidate needs an 'intercepts' array");
    KakeyaCandidate kc;
    for (const auto& v : candidate["intercepts"])
        kc.intercepts.push_back(json_number_to_rational(v, "intercept"));
    KakeyaResult result = verify_kakeya(instance, kc, manifest.baseline->value);
    report.verdict = result.verdict;
    report.metric = result.area.to_string();
    report.metric_decimal = result.area_decimal;
    if (result.relative_improvement)
        report.relative_improvement =
            BigFloat::from_rational(*result.relative_improvement, 10).to_decimal();
    for (const auto& d : result.diagnostics) report.diagnostics.push_back(d);
}

PiecewiseConstant parse_witness(const nlohmann::json& j, const std::string& name) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values") ||
        !j["breakpoints"].is_array() || !j["values"].is_array())
        throw CandidateError(name + " needs 'breakpoints' and 'values' arrays");
    PiecewiseConstant w;
    for (const auto& v : j["breakpoints"])
        w.breakpoints.push_back(json_number_to_rational(v, name + " breakpoint"));
    for (const auto& v : j["values"])
        w.values.push_back(json_number_to_rational(v, name + " value"));
    return w;
}

void run_ramsey(const ProblemManifest& manifest, const nlohmann::json& candidate,
                const EngineOptions& options, EvaluationReport& report) {
    if (!candidate.is_object() || !candidate.contains("correction_coeffs") ||
        !candidate["correction_coeffs"].is_array())
        throw CandidateError("certificate needs a 'correction_coeffs' array");
    RamseyCertificate cert;
    for (const auto& v : candidate["correction_coeffs"])
        cert.correction.push_back(json_number_to_rational(v, "correction coefficient"));
    if (candidate.contains("constant_term"))
        cert.constant_term =
            json_number_to_rational(candidate["constant_term"], "constant term");
    if (!candidate.contains("M") || !candidate.contains("Y"))
        throw CandidateError("certificate needs 'M' and 'Y' witnesses");
    cert.m_witness = parse_witness(candidate["M"], "M");
    cert.y_witness = parse_witness(candidate["Y"], "Y");
    if (candidate.contains("notes") && candidate["notes"].is_string())
        cert.notes = candidate["notes"].get<std::string>();

    CertificateVerdict verdict;
    try {
        verdict = check_certificate(cert, options.lambda_min, options.ramsey_limits,
                                    options.ramsey_precision);
    } catch (const CertificateError& e) {
        throw CandidateError(std::string("structural certificate violation: ") +
                             e.what());
    }
    BigFloat c = resulting_c(cert);
    report.bound_value = c.to_decimal();
    for (const auto& d : verdict.diagnostics) report.diagnostics.push_back(d);
    if (verdict.margin) report.certified_margin = verdict.margin->to_decimal(10);
    if (verdict.counterexample)
        report.diagnostics.push_back(
            "condition (" + std::to_string(verdict.counterexample->condition) +
            ") violated near lambda = " + verdict.counterexample->lambda.to_string() +
            ": " + verdict.counterexample->details);

    const Rational c_exact = c.to_rational();
    const Rational& baseline = manifest.baseline->value;
    switch (verdict.status) {
        case CertStatus::fail:
            report.verdict = Verdict::fail;
            break;
        case CertStatus::undecided:
            report.verdict = Verdict::undecided;
            break;
        case CertStatus::pass: {
            bool better = manifest.baseline->direction == Direction::minimize
                              ? c_exact < baseline
                              : c_exact > baseline;
            report.metric = c_exact.to_string();
            report.metric_decimal = c.to_decimal(20);
            if (better) {
                report.verdict = Verdict::pass;
                if (!baseline.is_zero())
                    report.relative_improvement =
                        BigFloat::from_rational((baseline - c_exact).abs() / baseline.abs(), 10)
                            .to_decimal();
            } else {
                report.verdict = Verdict::fail;
                report.diagnostics.push_back(
                    "certificate is valid but its bound does not improve on the "
                    "baseline");
            }
            break;
        }
    }
}

void run_construction(const ProblemManifest& manifest, const nlohmann::json& candidate,
                      EvaluationReport& report) {
    const std::string& validator = *manifest.validator;
    ValidationOutcome outcome;
    if (validator == "hadamard") {
        if (!candidate.is_object() || !candidate.contains("matrix"))
            throw CandidateError("Hadamard candidate needs a 'matrix' field");
        const long order = param_or(manifest.validator_params, "order", 0);
        IntMatrix matrix = parse_int_matrix(candidate["matrix"], "matrix");
        if (order > 0 && static_cast<long>(matrix.size()) != order)
            throw CandidateError("candidate order does not match the problem (" +
                                 std::to_string(matrix.size()) + " vs " +
                                 std::to_string(order) + ")");
        outcome = validate_hadamard(matrix);
    } else if (validator == "mols") {
        if (!candidate.is_object() || !candidate.contains("squares") ||
            !candidate["squares"].is_array())
            throw CandidateError("MOLS candidate needs a 'squares' array");
        const long order = param_or(manifest.validator_params, "order", 0);
        const long count = param_or(manifest.validator_params, "count", 0);
        std::vector<IntMatrix> squares;
        for (const auto& sj : candidate["squares"])
            squares.push_back(parse_int_matrix(sj, "square"));
        if (count > 0 && static_cast<long>(squares.size()) < count)
            throw CandidateError("problem asks for " + std::to_string(count) +
                                 " squares, candidate has " +
                                 std::to_string(squares.size()));
        outcome = validate_mols(static_cast<int>(order), squares);
    } else {
        throw ManifestError("validator '" + validator +
                            "' is not a construction validator");
    }
    report.verdict = outcome.valid ? Verdict::pass : Verdict::fail;
    for (const auto& d : outcome.diagnostics) report.diagnostics.push_back(d);
}

}  // namespace

EvaluationReport run_verification(const ProblemManifest& manifest,
                                  const std::filesystem::path& candidate_path,
                                  const EngineOptions& options) {
    EvaluationReport report;
    report.problem_id = manifest.id;
    report.mode = std::string(mode_name(manifest.mode));
    report.engine_version = std::string(kEngineVersion);
    report.manifest_hash = manifest.manifest_hash;
    const auto start = std::chrono::steady_clock::now();

    try {
        const std::string bytes = read_file(candidate_path);
        switch (manifest.mode) {
            case Mode::ground_truth_computable:
                run_ground_truth(manifest, bytes, options, report);
                break;
            case Mode::benchmark_best_known: {
                const std::string& validator = *manifest.validator;
                nlohmann::json candidate = parse_candidate_json(bytes);
                if (validator == "dts") run_dts(manifest, candidate, report);
                else if (validator == "kakeya_union_area")
                    run_kakeya(manifest, candidate, report);
                else if (validator == "ramsey_certificate")
                    run_ramsey(manifest, candidate, options, report);
                else {
                    // generic metric validators score through the baseline rule
                    throw ManifestError("validator '" + validator +
                                        "' has no benchmark binding");
                }
                break;
            }
            case Mode::new_construction:
                run_construction(manifest, parse_candidate_json(bytes), report);
                break;
        }
    } catch (const std::exception& e) {
        report.verdict = Verdict::error;
        report.diagnostics.push_back(e.what());
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

BatchResult batch_run(const std::filesystem::path& manifest_dir,
                      const std::filesystem::path& candidates_dir,
                      const EngineOptions& options) {
    BatchResult batch;
    namespace fs = std::filesystem;

    std::vector<fs::path> manifest_paths;
    for (const auto& entry : fs::directory_iterator(manifest_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            manifest_paths.push_back(entry.path());
    std::sort(manifest_paths.begin(), manifest_paths.end());

    std::vector<fs::path> candidate_paths;
    if (fs::exists(candidates_dir))
        for (const auto& entry : fs::directory_iterator(candidates_dir))
            if (entry.is_regular_file()) candidate_paths.push_back(entry.path());
    std::sort(candidate_paths.begin(), candidate_paths.end());

    std::vector<std::pair<ProblemManifest, fs::path>> manifests;
    for (const auto& path : manifest_paths) {
        try {
            manifests.emplace_back(load_manifest(path), path);
        } catch (const std::exception& e) {
            batch.warnings.push_back("skipping " + path.filename().string() + ": " +
                                     e.what());
        }
    }
    std::sort(manifests.begin(), manifests.end(),
              [](const auto& a, const auto& b) { return a.first.id < b.first.id; });

    std::vector<bool> candidate_used(candidate_paths.size(), false);
    for (const auto& [manifest, mpath] : manifests) {
        std::optional<fs::path> chosen;
        for (size_t i = 0; i < candidate_paths.size(); ++i) {
            const std::string stem = candidate_paths[i].stem().string();
            if (stem == manifest.id || stem.starts_with(manifest.id + "__")) {
                if (chosen)
                    batch.warnings.push_back("multiple candidates for '" + manifest.id +
                                             "'; later file " +
                                             candidate_paths[i].filename().string() +
                                             " wins");
                chosen = candidate_paths[i];
                candidate_used[i] = true;
            }
        }
        if (!chosen) continue;
        batch.reports.push_back(run_verification(manifest, *chosen, options));
    }
    for (size_t i = 0; i < candidate_paths.size(); ++i)
        if (!candidate_used[i])
            batch.warnings.push_back("candidate " + candidate_paths[i].filename().string() +
                                     " matches no problem id");

    for (const char* v : {"PASS", "FAIL", "INADMISSIBLE", "UNDECIDED", "ERROR"})
        batch.summary[v] = 0;
    for (const auto& r : batch.reports)
        batch.summary[std::string(verdict_name(r.verdict))]++;
    return batch;
}

nlohmann::json batch_to_canonical_json(const BatchResult& batch) {
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : batch.reports) j["reports"].push_back(report_to_canonical_json(r));
    j["summary"] = batch.summary;
    j["warnings"] = batch.warnings;
    return j;
}

int exit_code_for(const std::vector<EvaluationReport>& reports) {
    bool any_fail = false, any_inadmissible = false, any_undecided = false,
         any_error = false;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::fail: any_fail = true; break;
            case Verdict::inadmissible: any_inadmissible = true; break;
            case Verdict::undecided: any_undecided = true; break;
            case Verdict::error: any_error = true; break;
            case Verdict::pass: break;
        }
    }
    if (any_fail) return 1;
    if (any_inadmissible) return 2;
    if (any_undecided) return 3;
    if (any_error) return 4;
    return 0;
}

}  // namespace mathverify
