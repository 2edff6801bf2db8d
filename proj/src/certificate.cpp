#include "acs/certificate.hpp"

#include <sstream>

#include <json.hpp>

#include "acs/error.hpp"
#include "acs/version.hpp"

namespace acs {

namespace {
using ordered_json = nlohmann::ordered_json;

ordered_json stat_to_json(const StatValue& v) {
    switch (v.type) {
        case StatValue::Type::Integer: return v.integer;
        case StatValue::Type::Real: return v.real;
        case StatValue::Type::Text: return v.text;
        case StatValue::Type::Boolean: return v.boolean;
    }
    return nullptr;
}
}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedNegative: return "certified-negative";
        case Verdict::CertifiedNonpositive: return "certified-nonpositive";
        case Verdict::PositiveWitnessFound: return "positive-witness-found";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::UpperBoundOnly: return "upper-bound-only";
    }
    return "unknown";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::SimplexQp: return "simplex-qp";
        case Method::ClosedFormBound: return "closed-form-bound";
        case Method::Sampling: return "sampling";
        case Method::ExplicitWitness: return "explicit-witness";
    }
    return "unknown";
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::CertifiedNegative:
        case Verdict::CertifiedNonpositive: return 0;
        case Verdict::PositiveWitnessFound: return 2;
        case Verdict::Inconclusive:
        case Verdict::UpperBoundOnly: return 3;
    }
    return 1;
}

std::string emit_json(const AcsCertificate& cert) {
    ordered_json j;
    j["family"] = cert.family;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : cert.parameters) params[key] = value;
    j["parameters"] = params;
    j["verdict"] = verdict_name(cert.verdict);
    j["acs_value_or_bound"] = cert.acs_value_or_bound;
    j["method"] = method_name(cert.method);
    if (cert.constant_term)
        j["constant_term"] = *cert.constant_term;
    else
        j["constant_term"] = nullptr;
    ordered_json idx = ordered_json::object();
    idx["acs"] = cert.index_constants.acs.empty() ? ordered_json(nullptr)
                                                  : ordered_json(cert.index_constants.acs);
    idx["robust"] = cert.index_constants.robust;
    idx["ambient_dim"] = cert.index_constants.ambient_dim;
    j["index_constants"] = idx;
    j["seed"] = cert.seed;
    j["samples"] = cert.samples;
    ordered_json stats = ordered_json::object();
    for (const auto& [key, value] : cert.solver_stats) stats[key] = stat_to_json(value);
    j["solver_stats"] = stats;
    j["tool_version"] = cert.tool_version.empty() ? std::string(ACSCERT_VERSION_STRING)
                                                  : cert.tool_version;
    return j.dump(2) + "\n";
}

std::string emit_text(const AcsCertificate& cert) {
    std::ostringstream out;
    out.precision(17);
    out << "ACS certificate: " << cert.family;
    if (!cert.parameters.empty()) {
        out << " (";
        for (std::size_t i = 0; i < cert.parameters.size(); ++i) {
            if (i) out << ", ";
            out << cert.parameters[i].first << "=" << cert.parameters[i].second;
        }
        out << ")";
    }
    out << "\n";
    out << "  verdict:        " << verdict_name(cert.verdict) << "\n";
    out << "  method:         " << method_name(cert.method) << "\n";
    out << "  acs value/bound " << cert.acs_value_or_bound << "\n";
    if (cert.constant_term) out << "  constant term:  " << *cert.constant_term << "\n";
    for (const auto& [key, value] : cert.solver_stats) {
        if (key == "certified_by") out << "  certified by:   " << value.text << "\n";
    }
    out << "  index bounds:   ambient dim " << cert.index_constants.ambient_dim;
    if (!cert.index_constants.acs.empty()) out << ", acs " << cert.index_constants.acs;
    out << ", robust " << cert.index_constants.robust << "\n";
    out << "  seed/samples:   " << cert.seed << " / " << cert.samples << "\n";
    for (const auto& [key, value] : cert.solver_stats) {
        if (key == "certified_by") continue;
        out << "  " << key << ": ";
        switch (value.type) {
            case StatValue::Type::Integer: out << value.integer; break;
            case StatValue::Type::Real: out << value.real; break;
            case StatValue::Type::Text: out << value.text; break;
            case StatValue::Type::Boolean: out << (value.boolean ? "true" : "false"); break;
        }
        out << "\n";
    }
    out << "  tool version:   "
        << (cert.tool_version.empty() ? ACSCERT_VERSION_STRING : cert.tool_version.c_str())
        << "\n";
    return out.str();
}

}  // namespace acs
