#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acs/index_bounds.hpp"

namespace acs {

/// Logical strength of a verification outcome. Only the exact simplex
/// maximization and closed-form bounds may certify negativity; sampling can
/// at most disprove it (by exhibiting a witness) or stay inconclusive.
enum class Verdict {
    CertifiedNegative,
    CertifiedNonpositive,
    PositiveWitnessFound,
    Inconclusive,
    UpperBoundOnly,
};

enum class Method {
    SimplexQp,
    ClosedFormBound,
    Sampling,
    ExplicitWitness,
};

const char* verdict_name(Verdict v);
const char* method_name(Method m);

/// Process exit code: 0 for certified-negative/nonpositive, 2 for a positive
/// witness, 3 otherwise (inconclusive and upper-bound-only reach no
/// conclusion); 1 is reserved for usage errors.
int verdict_exit_code(Verdict v);

/// One stat entry; values are rendered as JSON numbers/strings verbatim so a
/// certificate serializes byte-identically for identical inputs.
struct StatValue {
    enum class Type { Integer, Real, Text, Boolean } type = Type::Integer;
    long long integer = 0;
    double real = 0.0;
    std::string text;
    bool boolean = false;

    static StatValue of(long long v) { return {Type::Integer, v, 0.0, {}, false}; }
    static StatValue of(double v) { return {Type::Real, 0, v, {}, false}; }
    static StatValue of(std::string v) { return {Type::Text, 0, 0.0, std::move(v), false}; }
    static StatValue of(bool v) { return {Type::Boolean, 0, 0.0, {}, v}; }
};

/// Machine-readable verification record for one family run.
struct AcsCertificate {
    std::string family;
    std::vector<std::pair<std::string, long long>> parameters;
    Verdict verdict = Verdict::Inconclusive;
    double acs_value_or_bound = 0.0;
    Method method = Method::ClosedFormBound;
    std::optional<double> constant_term;
    IndexConstants index_constants;
    std::uint64_t seed = 0;
    long long samples = 0;
    std::vector<std::pair<std::string, StatValue>> solver_stats;
    std::string tool_version;

    void stat(const std::string& key, StatValue v) { solver_stats.emplace_back(key, std::move(v)); }
};

/// Single JSON object with exactly the certificate fields, snake_case keys,
/// rationals as "p/q" strings, reals in round-trip precision. Byte-stable for
/// fixed inputs.
std::string emit_json(const AcsCertificate& cert);

/// One-screen human-readable summary naming the certifying statement.
std::string emit_text(const AcsCertificate& cert);

}  // namespace acs
