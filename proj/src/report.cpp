#include "mathverify/report.hpp"

#include <sstream>

namespace mathverify {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inadmissible: return "INADMISSIBLE";
        case Verdict::undecided: return "UNDECIDED";
        case Verdict::error: return "ERROR";
    }
    return "?";
}

nlohmann::json report_to_canonical_json(const EvaluationReport& r) {
    nlohmann::json j;  // nlohmann objects keep keys sorted
    j["problem_id"] = r.problem_id;
    j["mode"] = r.mode;
    j["verdict"] = std::string(verdict_name(r.verdict));
    if (r.matched_digits_min) j["matched_digits_min"] = *r.matched_digits_min;
    if (!r.matched_digits.empty()) j["matched_digits"] = r.matched_digits;
    if (r.metric) j["metric"] = *r.metric;
    if (r.metric_decimal) j["metric_decimal"] = *r.metric_decimal;
    if (r.relative_improvement) j["relative_improvement"] = *r.relative_improvement;
    if (r.certified_margin) j["certified_margin"] = *r.certified_margin;
    if (r.bound_value) j["bound_value"] = *r.bound_value;
    j["diagnostics"] = r.diagnostics;
    j["engine_version"] = r.engine_version;
    j["manifest_hash"] = r.manifest_hash;
    return j;
}

std::string report_to_text(const EvaluationReport& r) {
    std::ostringstream out;
    out << r.problem_id << " [" << r.mode << "] -> " << verdict_name(r.verdict) << "\n";
    if (r.matched_digits_min)
        out << "  matched digits (min over grid): " << *r.matched_digits_min << "\n";
    if (!r.matched_digits.empty()) {
        out << "  matched digits per point:";
        for (int m : r.matched_digits) out << " " << m;
        out << "\n";
    }
    if (r.metric) out << "  metric (exact): " << *r.metric << "\n";
    if (r.metric_decimal) out << "  metric (decimal): " << *r.metric_decimal << "\n";
    if (r.relative_improvement)
        out << "  relative improvement: " << *r.relative_improvement << "\n";
    if (r.certified_margin) out << "  certified margin: " << *r.certified_margin << "\n";
    if (r.bound_value) out << "  resulting bound: " << *r.bound_value << "\n";
    for (const auto& d : r.diagnostics) out << "  note: " << d << "\n";
    out << "  engine " << r.engine_version << ", manifest " << r.manifest_hash << ", "
        << r.duration_seconds << "s\n";
    return out.str();
}

}  // namespace mathverify
