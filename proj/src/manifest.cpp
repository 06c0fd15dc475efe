#include "mathverify/manifest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mathverify/errors.hpp"

namespace mathverify {

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::ground_truth_computable: return "ground_truth_computable";
        case Mode::benchmark_best_known: return "benchmark_best_known";
        case Mode::new_construction: return "new_construction";
    }
    return "?";
}

Mode mode_from_name(std::string_view name) {
    if (name == "ground_truth_computable") return Mode::ground_truth_computable;
    if (name == "benchmark_best_known") return Mode::benchmark_best_known;
    if (name == "new_construction") return Mode::new_construction;
    throw ManifestError("unknown mode: " + std::string(name));
}

std::string_view output_type_name(OutputType t) {
    switch (t) {
        case OutputType::constant: return "constant";
        case OutputType::function: return "function";
        case OutputType::construction: return "construction";
        case OutputType::formula: return "formula";
    }
    return "?";
}

OutputType output_type_from_name(std::string_view name) {
    if (name == "constant") return OutputType::constant;
    if (name == "function") return OutputType::function;
    if (name == "construction") return OutputType::construction;
    if (name == "formula") return OutputType::formula;
    throw ManifestError("unknown output_type: " + std::string(name));
}

const std::vector<std::string>& taxonomy_domains() {
    static const std::vector<std::string> domains = {
        "analysis_special_functions",
        "mathematical_physics",
        "geometry_discrete_geometry",
        "number_theory",
        "combinatorics_design_theory",
        "combinatorics_graph_theory",
        "coding_information_theory",
        "algebra",
    };
    return domains;
}

const std::vector<std::string>& known_validators() {
    static const std::vector<std::string> ids = {
        "dts", "hadamard", "mols", "kakeya_union_area", "ramsey_certificate",
    };
    return ids;
}

std::string fnv1a64_hex(std::string_view bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4)
        out += hex[(h >> shift) & 0xf];
    return out;
}

namespace {

void reject_unknown_keys(const nlohmann::json& obj,
                         const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ManifestError("unknown field '" + it.key() + "' in " + where);
    }
}

std::string require_string(const nlohmann::json& obj, const std::string& key,
                           const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        throw ManifestError(where + " needs a string field '" + key + "'");
    return obj[key].get<std::string>();
}

ReferenceValue parse_reference(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw ManifestError(where + " must be an object");
    reject_unknown_keys(j, {"digits", "verified_digits"}, where);
    ReferenceValue ref;
    ref.digits = require_string(j, "digits", where);
    if (!j.contains("verified_digits") || !j["verified_digits"].is_number_integer())
        throw ManifestError(where + " needs an integer 'verified_digits'");
    ref.verified_digits = j["verified_digits"].get<int>();
    if (ref.verified_digits < 1)
        throw ManifestError(where + ": verified_digits must be >= 1");
    // stored digit string must carry at least D significand digits
    int stored = 0;
    for (char c : ref.digits) {
        if (c == 'e' || c == 'E') break;
        if (std::isdigit(static_cast<unsigned char>(c))) ++stored;
    }
    std::string significand = ref.digits.substr(0, ref.digits.find_first_of("eE"));
    size_t first_nonzero = significand.find_first_of("123456789");
    if (first_nonzero != std::string::npos) {
        int leading_zeros = 0;
        for (size_t i = 0; i < first_nonzero; ++i)
            if (std::isdigit(static_cast<unsigned char>(significand[i]))) ++leading_zeros;
        stored -= leading_zeros;
    }
    if (stored < ref.verified_digits)
        throw ManifestError(where + ": digit string stores " + std::to_string(stored) +
                            " significant digits, fewer than verified_digits = " +
                            std::to_string(ref.verified_digits));
    try {
        Rational::from_string(ref.digits);
    } catch (const std::exception& e) {
        throw ManifestError(where + ": bad digits: " + e.what());
    }
    return ref;
}

GroundTruthSpec parse_ground_truth(const nlohmann::json& j) {
    if (!j.is_object()) throw ManifestError("ground_truth must be an object");
    reject_unknown_keys(j, {"kind", "reference", "points", "digit_semantics"},
                        "ground_truth");
    GroundTruthSpec spec;
    const std::string kind = require_string(j, "kind", "ground_truth");
    if (j.contains("digit_semantics")) {
        const std::string sem = require_string(j, "digit_semantics", "ground_truth");
        if (sem == "absolute") spec.absolute_semantics = true;
        else if (sem != "significant")
            throw ManifestError("digit_semantics must be 'significant' or 'absolute'");
    }
    if (kind == "constant") {
        spec.kind = GroundTruthSpec::Kind::constant;
        if (!j.contains("reference"))
            throw ManifestError("constant ground_truth needs 'reference'");
        GridPoint point;
        point.reference = parse_reference(j["reference"], "ground_truth.reference");
        spec.points.push_back(std::move(point));
    } else if (kind == "function_grid") {
        spec.kind = GroundTruthSpec::Kind::function_grid;
        if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
            throw ManifestError("function_grid needs a nonempty 'points' array");
        std::optional<std::set<std::string>> variable_set;
        for (const auto& pj : j["points"]) {
            reject_unknown_keys(pj, {"bindings", "reference"}, "ground_truth.points[]");
            if (!pj.contains("bindings") || !pj["bindings"].is_object())
                throw ManifestError("grid point needs an object 'bindings'");
            GridPoint point;
            std::set<std::string> names;
            for (auto it = pj["bindings"].begin(); it != pj["bindings"].end(); ++it) {
                if (!it.value().is_string())
                    throw ManifestError("binding values must be exact strings");
                point.bindings[it.key()] =
                    Rational::from_string(it.value().get<std::string>());
                names.insert(it.key());
            }
            if (variable_set && *variable_set != names)
                throw ManifestError("all grid points must bind the same variable set");
            variable_set = names;
            point.reference = parse_reference(pj["reference"], "grid reference");
            spec.points.push_back(std::move(point));
        }
    } else {
        throw ManifestError("ground_truth kind must be 'constant' or 'function_grid'");
    }
    return spec;
}

BaselineSpec parse_baseline(const nlohmann::json& j) {
    if (!j.is_object()) throw ManifestError("baseline must be an object");
    reject_unknown_keys(j, {"value", "direction", "source_note"}, "baseline");
    BaselineSpec baseline;
    baseline.value_text = require_string(j, "value", "baseline");
    try {
        baseline.value = Rational::from_string(baseline.value_text);
    } catch (const std::exception& e) {
        throw ManifestError(std::string("bad baseline value: ") + e.what());
    }
    const std::string dir = require_string(j, "direction", "baseline");
    if (dir == "minimize") baseline.direction = Direction::minimize;
    else if (dir == "maximize") baseline.direction = Direction::maximize;
    else throw ManifestError("baseline direction must be 'minimize' or 'maximize'");
    if (j.contains("source_note"))
        baseline.source_note = require_string(j, "source_note", "baseline");
    return baseline;
}

}  // namespace

ProblemManifest parse_manifest(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
    reject_unknown_keys(j,
                        {"schema_version", "id", "title", "statement", "domain",
                         "output_type", "mode", "solvability", "source",
                         "ground_truth", "baseline", "validator", "validator_params",
                         "admissibility"},
                        "manifest");

    ProblemManifest m;
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw ManifestError("manifest needs an integer 'schema_version'");
    m.schema_version = j["schema_version"].get<int>();
    if (m.schema_version != 1)
        throw ManifestError("unsupported schema_version " +
                            std::to_string(m.schema_version));

    m.id = require_string(j, "id", "manifest");
    if (m.id.empty()) throw ManifestError("manifest id must be nonempty");
    m.title = require_string(j, "title", "manifest");
    m.statement = require_string(j, "statement", "manifest");

    m.domain = require_string(j, "domain", "manifest");
    const auto& domains = taxonomy_domains();
    if (std::find(domains.begin(), domains.end(), m.domain) == domains.end())
        throw ManifestError("unknown domain '" + m.domain + "'");

    m.output_type = output_type_from_name(require_string(j, "output_type", "manifest"));
    m.mode = mode_from_name(require_string(j, "mode", "manifest"));

    if (!j.contains("solvability") || !j["solvability"].is_number_integer())
        throw ManifestError("manifest needs an integer 'solvability'");
    m.solvability = j["solvability"].get<int>();
    if (m.solvability < 0 || m.solvability > 3)
        throw ManifestError("solvability must be 0, 1, 2 or 3");

    if (j.contains("source")) {
        reject_unknown_keys(j["source"], {"citation", "url"}, "source");
        if (j["source"].contains("citation"))
            m.source.citation = require_string(j["source"], "citation", "source");
        if (j["source"].contains("url"))
            m.source.url = require_string(j["source"], "url", "source");
    }

    // exactly one mode payload, matching the mode
    const bool has_gt = j.contains("ground_truth");
    const bool has_baseline = j.contains("baseline");
    const bool has_validator = j.contains("validator");
    switch (m.mode) {
        case Mode::ground_truth_computable:
            if (!has_gt)
                throw ManifestError("ground_truth_computable manifest needs 'ground_truth'");
            if (has_baseline || has_validator)
                throw ManifestError(
                    "ground_truth_computable manifest must not carry 'baseline' or "
                    "'validator'");
            m.ground_truth = parse_ground_truth(j["ground_truth"]);
            break;
        case Mode::benchmark_best_known:
            if (!has_baseline || !has_validator)
                throw ManifestError(
                    "benchmark_best_known manifest needs 'baseline' and 'validator'");
            if (has_gt)
                throw ManifestError("benchmark manifest must not carry 'ground_truth'");
            m.baseline = parse_baseline(j["baseline"]);
            m.validator = require_string(j, "validator", "manifest");
            break;
        case Mode::new_construction:
            if (!has_validator)
                throw ManifestError("new_construction manifest needs 'validator'");
            if (has_gt || has_baseline)
                throw ManifestError(
                    "new_construction manifest must not carry 'ground_truth' or "
                    "'baseline'");
            m.validator = require_string(j, "validator", "manifest");
            break;
    }
    if (m.validator) {
        const auto& ids = known_validators();
        if (std::find(ids.begin(), ids.end(), *m.validator) == ids.end())
            throw ManifestError("unknown validator id '" + *m.validator + "'");
    }
    if (j.contains("validator_params")) {
        if (!m.validator)
            throw ManifestError("validator_params without a validator binding");
        if (!j["validator_params"].is_object())
            throw ManifestError("validator_params must be an object");
        m.validator_params = j["validator_params"];
    }

    if (j.contains("admissibility")) {
        const auto& a = j["admissibility"];
        reject_unknown_keys(a,
                            {"max_numerator_digits", "max_denominator_digits",
                             "max_exponent_magnitude"},
                            "admissibility");
        auto read_int = [&](const char* key, auto setter) {
            if (a.contains(key)) {
                if (!a[key].is_number_integer() || a[key].get<long>() < 1)
                    throw ManifestError(std::string("admissibility.") + key +
                                        " must be a positive integer");
                setter(a[key].get<long>());
            }
        };
        read_int("max_numerator_digits",
                 [&](long v) { m.admissibility.max_numerator_digits = static_cast<int>(v); });
        read_int("max_denominator_digits",
                 [&](long v) { m.admissibility.max_denominator_digits = static_cast<int>(v); });
        read_int("max_exponent_magnitude",
                 [&](long v) { m.admissibility.max_exponent_magnitude = v; });
    }
    return m;
}

ProblemManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ManifestError("cannot open manifest " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    ProblemManifest m = parse_manifest(bytes);
    m.manifest_hash = fnv1a64_hex(bytes);
    return m;
}

std::string truncate_significant(const std::string& decimal, int figures) {
    // split off sign, significand and exponent
    std::string s = decimal;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(s.begin());
    }
    long exp10 = 0;
    if (auto ep = s.find_first_of("eE"); ep != std::string::npos) {
        exp10 = std::stol(s.substr(ep + 1));
        s = s.substr(0, ep);
    }
    std::string digits;
    long point_shift = 0;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        point_shift = static_cast<long>(s.size() - dot - 1);
    } else {
        digits = s;
    }
    // normalize: strip leading zeros, track magnitude of the first digit
    size_t lead = digits.find_first_not_of('0');
    if (lead == std::string::npos) return negative ? "-0" : "0";
    long magnitude = static_cast<long>(digits.size() - lead) - 1 - point_shift + exp10;
    digits = digits.substr(lead);
    if (static_cast<int>(digits.size()) > figures) digits = digits.substr(0, figures);

    std::string out;
    if (magnitude >= -4 && magnitude <= 6) {
        if (magnitude >= 0) {
            if (static_cast<long>(digits.size()) <= magnitude) {
                digits += std::string(magnitude + 1 - digits.size(), '0');
                out = digits;
            } else {
                out = digits.substr(0, magnitude + 1);
                std::string frac = digits.substr(magnitude + 1);
                if (!frac.empty()) out += "." + frac;
            }
        } else {
            out = "0." + std::string(-magnitude - 1, '0') + digits;
        }
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(magnitude);
    }
    // cosmetic: drop trailing fractional zeros
    if (auto dot = out.find('.'); dot != std::string::npos &&
                                  out.find('e') == std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') --last;
        out = out.substr(0, last + 1);
    }
    return negative ? "-" + out : out;
}

std::string render_prompt(const ProblemManifest& m) {
    std::ostringstream out;
    out << "Problem: " << m.title << "\n";
    out << "Domain: " << m.domain << " | Output type: " << output_type_name(m.output_type)
        << " | Mode: " << mode_name(m.mode) << " | Solvability: " << m.solvability
        << "\n\n";
    out << m.statement << "\n";

    switch (m.mode) {
        case Mode::ground_truth_computable: {
            const auto& spec = *m.ground_truth;
            if (spec.kind == GroundTruthSpec::Kind::constant) {
                out << "\nThe target value is approximately "
                    << truncate_significant(spec.points[0].reference.digits, 5)
                    << " (shown to at most 5 significant figures).\n";
            } else {
                out << "\nKnown sample values (shown to at most 5 significant "
                       "figures):\n";
                for (const auto& point : spec.points) {
                    out << "  ";
                    bool first = true;
                    for (const auto& [name, value] : point.bindings) {
                        if (!first) out << ", ";
                        out << name << " = " << value.to_string();
                        first = false;
                    }
                    out << "  ->  "
                        << truncate_significant(point.reference.digits, 5) << "\n";
                }
            }
            out << "A candidate closed-form expression must match the reference to "
                   "min(20, D) significant digits and use only admissible "
                   "operations.\n";
            break;
        }
        case Mode::benchmark_best_known: {
            out << "\nBest known value: "
                << truncate_significant(m.baseline->value_text, 5)
                << " (direction: "
                << (m.baseline->direction == Direction::minimize ? "minimize"
                                                                 : "maximize")
                << ")\n";
            if (!m.baseline->source_note.empty())
                out << "Baseline source: " << m.baseline->source_note << "\n";
            out << "A candidate passes only by strictly improving on the best-known "
                   "value.\n";
            break;
        }
        case Mode::new_construction:
            out << "\nA candidate must satisfy every required structural property; "
                   "verification is deterministic (validator: "
                << *m.validator << ").\n";
            break;
    }
    if (!m.source.citation.empty()) out << "\nSource: " << m.source.citation << "\n";
    return out.str();
}

}  // namespace mathverify
