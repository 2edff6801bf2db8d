#include "acs/runner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "acs/isoparametric.hpp"
#include "acs/lie_embeddings.hpp"
#include "acs/parallel.hpp"
#include "acs/version.hpp"

namespace acs {

namespace {

using ordered_json = nlohmann::ordered_json;

int effective_threads(const RunOptions& opt) {
    return opt.threads > 0 ? opt.threads : thread_cap();
}

std::string format_point(const Simplex4& t) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "[%.17g, %.17g, %.17g, %.17g]", t[0], t[1], t[2], t[3]);
    return buf;
}

// Shared minimal-leaf pipeline: exact multiplicity precheck, then the four
// concave vertex programs. The value is the exact maximum of the simplex
// reduction for m1 > 1 and an upper bound for the maximum of ACS when m1 = 1.
void fill_minimal_leaf(AcsCertificate& cert, const Multiplicities& m, const RunOptions& opt,
                       const std::string& exact_certifier) {
    const MaxAcsResult res = max_acs(m);
    cert.method = Method::SimplexQp;
    cert.acs_value_or_bound = res.value;

    if (!exact_certifier.empty()) {
        cert.verdict = Verdict::CertifiedNegative;
        cert.stat("certified_by", StatValue::of(exact_certifier));
    } else if (res.value < 0.0) {
        cert.verdict = Verdict::CertifiedNegative;
        cert.stat("certified_by",
                  StatValue::of(std::string(res.upper_bound_only
                                                ? "simplex upper bound of the reduction < 0"
                                                : "simplex maximum of the quadratic reduction < 0")));
    } else if (res.upper_bound_only) {
        cert.verdict = Verdict::UpperBoundOnly;
        cert.stat("certified_by", StatValue::of(std::string("none")));
    } else if (res.value == 0.0) {
        cert.verdict = Verdict::CertifiedNonpositive;
        cert.stat("certified_by",
                  StatValue::of(std::string("simplex maximum of the quadratic reduction = 0")));
    } else {
        cert.verdict = Verdict::PositiveWitnessFound;
        cert.stat("certified_by",
                  StatValue::of(std::string("maximizing pair of the quadratic reduction")));
    }

    cert.stat("value_semantics",
              StatValue::of(std::string(res.upper_bound_only ? "upper-bound" : "exact-max")));
    cert.stat("argmax_s_vertex", StatValue::of(static_cast<long long>(res.s_vertex)));
    cert.stat("argmax_t", StatValue::of(format_point(res.t)));
    cert.stat("faces_evaluated", StatValue::of(static_cast<long long>(res.faces_evaluated)));
    cert.stat("max_kkt_residual", StatValue::of(res.max_kkt_residual));
    cert.stat("simple_upper_bound", StatValue::of(simple_upper_bound(m)));

    // The m1 = 4 case has no exact certifying condition; report where the
    // numeric maximum turns negative as evidence, never as a certified
    // threshold.
    if (m.m1 == 4)
        cert.stat("m1_4_smallest_negative_m2",
                  StatValue::of(static_cast<long long>(smallest_negative_m2(4, 64))));

    if (opt.with_grid_oracle) {
        const CurvatureNormalSystem sys = curvature_normals(m);
        double grid_best = 0.0, bound = 0.0;
        bool first = true;
        for (int k = 0; k < 4; ++k) {
            const GridOracleResult g = grid_oracle(acs_vertex_program(sys, m, k), opt.grid_step);
            if (first || g.value > grid_best) grid_best = g.value;
            bound = std::max(bound, g.resolution_bound);
            first = false;
        }
        cert.stat("grid_max", StatValue::of(grid_best));
        cert.stat("grid_resolution_bound", StatValue::of(bound));
        cert.stat("grid_consistent",
                  StatValue::of(res.value >= grid_best - 1e-9 &&
                                res.value <= grid_best + bound + 1e-9));
    }
}

void fill_focal_leaf(AcsCertificate& cert, int m1, int m2, const std::string& certifier) {
    cert.method = Method::ClosedFormBound;
    cert.acs_value_or_bound = focal_acs_upper(m1, m2);
    if (focal_acs_negative(m1, m2)) {
        cert.verdict = Verdict::CertifiedNegative;
        cert.stat("certified_by", StatValue::of(certifier));
    } else {
        cert.verdict = Verdict::UpperBoundOnly;
        cert.stat("certified_by", StatValue::of(std::string("none")));
    }
    cert.stat("condition", StatValue::of("4*m2 = " + std::to_string(4LL * m2) +
                                         (focal_acs_negative(m1, m2) ? " > " : " <= ") +
                                         std::to_string(3LL * m1 + 10) + " = 3*m1 + 10"));
    cert.stat("focal_ricci_lower", StatValue::of(2.0 * m2 - 2.0));
}

void attach_sweep(AcsCertificate& cert, const EmbeddingFamily& family, const RunOptions& opt) {
    if (opt.samples < 1) {
        cert.samples = 0;
        return;
    }
    const SweepResult sweep =
        sample_min_acs(family, opt.samples, opt.seed, effective_threads(opt), opt.strict_trace);
    cert.samples = sweep.samples;
    cert.stat("empirical_min", StatValue::of(sweep.min_value));
}

}  // namespace

AcsCertificate verify_isoparametric(int m1, int m2, bool focal, const RunOptions& opt) {
    const Multiplicities m(m1, m2);
    AcsCertificate cert;
    cert.family = focal ? "isoparametric-focal" : "isoparametric-minimal";
    cert.parameters = {{"m1", m1}, {"m2", m2}, {"n", m.n()}};
    cert.index_constants = make_index_constants(m.n() + 2);
    cert.seed = opt.seed;
    cert.samples = 0;
    cert.tool_version = ACSCERT_VERSION_STRING;

    if (focal) {
        fill_focal_leaf(cert, m1, m2, "focal bound: 4*m2 > 3*m1 + 10");
    } else {
        const std::string exact =
            m1 >= 5 ? std::string("minimal-leaf bound: m1 >= 5") : std::string();
        fill_minimal_leaf(cert, m, opt, exact);
    }
    return cert;
}

namespace {

Rational su_bound_rational(int n) {
    // ACS <= -b_n; for odd n only the bracket end is certified:
    //   b_n >= (-n^2 + 17 n + 16) / (16 n^2 (n + 1)).
    const BigInt bn(n);
    if (n % 2 == 0) return Rational(BigInt(18 - n), BigInt(16) * bn * bn);
    return Rational(BigInt(-static_cast<long long>(n) * n + 17LL * n + 16),
                    BigInt(16) * bn * bn * BigInt(n + 1));
}

Rational su_witness_expected(int n) {
    // Even n: -b_n = (n - 18)/(16 n^2). Odd n: the padded even witness
    // achieves (n^2 - 19 n + 16) / (16 n^2 (n - 1)).
    const BigInt bn(n);
    if (n % 2 == 0) return Rational(BigInt(n - 18), BigInt(16) * bn * bn);
    return Rational(BigInt(static_cast<long long>(n) * n - 19LL * n + 16),
                    BigInt(16) * bn * bn * BigInt(n - 1));
}

}  // namespace

AcsCertificate verify_group(GroupKind kind, int n, const RunOptions& opt) {
    AcsCertificate cert;
    cert.seed = opt.seed;
    cert.tool_version = ACSCERT_VERSION_STRING;

    if (kind == GroupKind::Sp) {
        const EmbeddingFamily family = EmbeddingFamily::sp(n);
        cert.family = family.tag();
        cert.parameters = {{"n", n}};
        cert.constant_term = family.constant_term();
        cert.index_constants = make_index_constants(family.ambient_dim());
        cert.method = Method::ClosedFormBound;
        cert.verdict = Verdict::CertifiedNegative;
        cert.acs_value_or_bound = -1.0 / (4.0 * (n + 1.0));
        cert.stat("certified_by", StatValue::of(std::string(
                                      "submultiplicative Frobenius bound: ACS <= -1/(4n+4)")));
        attach_sweep(cert, family, opt);
        return cert;
    }

    const EmbeddingFamily family = EmbeddingFamily::su(n);
    cert.family = family.tag();
    cert.parameters = {{"n", n}};
    cert.constant_term = family.constant_term();
    cert.index_constants = make_index_constants(family.ambient_dim());

    if (n < 18) {
        const Rational bound = su_bound_rational(n);
        cert.method = Method::ClosedFormBound;
        cert.verdict = Verdict::CertifiedNegative;
        cert.acs_value_or_bound = -bound.to_double();
        cert.stat("certified_by",
                  StatValue::of(std::string(n % 2 == 0
                                                ? "b_n = (18-n)/(16 n^2) > 0"
                                                : "b_n bracket: b_n >= (-n^2+17n+16)/(16 n^2 (n+1)) > 0")));
        cert.stat("b_n_lower_bound", StatValue::of(bound.to_string()));
        attach_sweep(cert, family, opt);
    } else if (n == 18) {
        cert.method = Method::ClosedFormBound;
        cert.verdict = Verdict::CertifiedNonpositive;
        cert.acs_value_or_bound = 0.0;
        cert.stat("certified_by", StatValue::of(std::string("b_18 = 0: ACS <= 0 with equality attained")));
        attach_sweep(cert, family, opt);
    } else {
        const MinimizerWitness witness = su_witness_any(n);
        cert.method = Method::ExplicitWitness;
        cert.verdict = Verdict::PositiveWitnessFound;
        cert.acs_value_or_bound = witness.value;
        cert.samples = 0;
        cert.stat("certified_by",
                  StatValue::of(std::string("constraint-satisfying pair with positive ACS value")));
        cert.stat("witness_construction", StatValue::of(witness.construction));
        cert.stat("witness_expected_value", StatValue::of(su_witness_expected(n).to_string()));
    }
    return cert;
}

AcsCertificate verify_grassmannian(int d, int n, const RunOptions& opt) {
    const EmbeddingFamily family = EmbeddingFamily::grassmann_h(d, n);
    AcsCertificate cert;
    cert.family = family.tag();
    cert.parameters = {{"d", d}, {"n", n}};
    cert.constant_term = family.constant_term();
    cert.index_constants = make_index_constants(family.ambient_dim());
    cert.seed = opt.seed;
    cert.tool_version = ACSCERT_VERSION_STRING;
    cert.method = Method::ClosedFormBound;
    cert.verdict = Verdict::CertifiedNegative;
    cert.acs_value_or_bound = -3.0 / (2.0 * (n + 1.0));
    cert.stat("certified_by", StatValue::of(std::string(
                                  "submultiplicative Frobenius bound: ACS <= -3/(2(n+1))")));
    attach_sweep(cert, family, opt);
    return cert;
}

AcsCertificate verify_catalog_entry(const ExampleFamily& family, const RunOptions& opt) {
    const FamilyData data = resolve_family(family);
    const ConditionVerdict cv = check_conditions(family);
    const Multiplicities m(data.m1, data.m2);

    AcsCertificate cert;
    cert.family = data.tag + (family.leaf == LeafKind::FocalMPlus ? "-focal" : "-minimal");
    switch (family.kind) {
        case FamilyKind::Fkm:
            cert.parameters = {{"m", family.m}, {"k", family.k},   {"l", data.l},
                               {"m1", data.m1}, {"m2", data.m2},
                               {"exceptional", data.exceptional ? 1 : 0}};
            break;
        case FamilyKind::E6Isolated:
            cert.parameters = {{"m1", data.m1}, {"m2", data.m2}};
            break;
        default:
            cert.parameters = {{"k", family.k}, {"m1", data.m1}, {"m2", data.m2}};
            break;
    }
    cert.index_constants = make_index_constants(m.n() + 2);
    cert.seed = opt.seed;
    cert.samples = 0;
    cert.tool_version = ACSCERT_VERSION_STRING;

    if (family.leaf == LeafKind::FocalMPlus) {
        fill_focal_leaf(cert, data.m1, data.m2, cv.certified ? cv.certifier : "none");
        if (family.kind == FamilyKind::Fkm)
            cert.stat("focal_leaf", StatValue::of(std::string(
                                        data.exceptional ? "H^-1(1)" : "H^-1(0)")));
    } else {
        fill_minimal_leaf(cert, m, opt, cv.certified ? cv.certifier : std::string());
        cert.stat("exact_condition", StatValue::of(cv.condition));
    }
    return cert;
}

AcsCertificate verify_clifford(int m, int k, const RunOptions& opt) {
    const CliffordSystem sys = clifford_system(m, k);
    if (!verify_clifford(sys))
        throw NumericalError("clifford_system construction failed its exact relation check");
    const FkmMultiplicities fm = fkm_multiplicities(m, k);

    ExampleFamily family;
    family.kind = FamilyKind::Fkm;
    family.m = m;
    family.k = k;
    family.leaf = LeafKind::FocalMPlus;
    const ConditionVerdict cv = check_conditions(family);

    AcsCertificate cert;
    cert.family = "fkm-clifford-system";
    cert.parameters = {{"m", m},        {"k", k},        {"l", fm.l},
                       {"m1", fm.m1},   {"m2", fm.m2},
                       {"exceptional", fm.exceptional ? 1 : 0}};
    cert.index_constants = make_index_constants(2 * fm.l);
    cert.seed = opt.seed;
    cert.samples = 0;
    cert.tool_version = ACSCERT_VERSION_STRING;

    fill_focal_leaf(cert, fm.m1, fm.m2, cv.certified ? cv.certifier : "none");
    cert.stat("focal_leaf", StatValue::of(std::string(fm.exceptional ? "H^-1(1)" : "H^-1(0)")));
    cert.stat("relations_verified", StatValue::of(true));
    cert.stat("matrix_size", StatValue::of(2 * fm.l));
    cert.stat("matrix_count", StatValue::of(static_cast<long long>(m + 1)));
    return cert;
}

AcsCertificate index_constants_certificate(long long dim) {
    if (dim < 1) throw InvalidArgument("index constants require dim >= 1");
    AcsCertificate cert;
    cert.family = "index-constants";
    cert.parameters = {{"dim", dim}};
    cert.index_constants = make_index_constants(dim);
    cert.verdict = Verdict::Inconclusive;  // carries no ACS claim
    cert.method = Method::ClosedFormBound;
    cert.acs_value_or_bound = 0.0;
    cert.seed = 0;
    cert.samples = 0;
    cert.tool_version = ACSCERT_VERSION_STRING;
    cert.stat("veronese_dim", StatValue::of(veronese_dim(dim)));
    const bool identity =
        robust_index_constant(dim) == acs_index_constant(veronese_dim(dim));
    cert.stat("veronese_identity_verified", StatValue::of(identity));
    return cert;
}

namespace {

struct CatalogRow {
    std::string tag;
    std::vector<std::pair<std::string, long long>> params;
    int m1, m2;
    bool exceptional = false;
    ConditionVerdict minimal, focal;
};

std::vector<CatalogRow> catalog_rows(const std::optional<std::string>& filter) {
    std::vector<ExampleFamily> families;
    for (int k = 3; k <= 10; ++k)
        families.push_back({FamilyKind::HomogeneousReal, k, 0, LeafKind::RegularMinimal});
    for (int k = 3; k <= 10; ++k)
        families.push_back({FamilyKind::HomogeneousComplex, k, 0, LeafKind::RegularMinimal});
    for (int k = 3; k <= 10; ++k)
        families.push_back({FamilyKind::HomogeneousQuaternionic, k, 0, LeafKind::RegularMinimal});
    families.push_back({FamilyKind::E6Isolated, 0, 0, LeafKind::RegularMinimal});
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= 4; ++k) {
            const long long other = static_cast<long long>(k) * delta(m) - m - 1;
            if (other < 1) continue;
            families.push_back({FamilyKind::Fkm, k, m, LeafKind::RegularMinimal});
        }

    std::vector<CatalogRow> rows;
    for (auto family : families) {
        const FamilyData data = resolve_family(family);
        if (filter && data.tag != *filter) continue;
        CatalogRow row;
        row.tag = data.tag;
        if (family.kind == FamilyKind::Fkm)
            row.params = {{"m", family.m}, {"k", family.k}, {"l", data.l}};
        else if (family.kind != FamilyKind::E6Isolated)
            row.params = {{"k", family.k}};
        row.m1 = data.m1;
        row.m2 = data.m2;
        row.exceptional = data.exceptional;
        family.leaf = LeafKind::RegularMinimal;
        row.minimal = check_conditions(family);
        family.leaf = LeafKind::FocalMPlus;
        row.focal = check_conditions(family);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string catalog_listing_json(const std::optional<std::string>& filter) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (const auto& row : catalog_rows(filter)) {
        ordered_json e;
        e["family"] = row.tag;
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : row.params) params[key] = value;
        e["parameters"] = params;
        e["m1"] = row.m1;
        e["m2"] = row.m2;
        e["exceptional"] = row.exceptional;
        e["minimal_leaf_certified"] = row.minimal.certified;
        e["minimal_leaf_certifier"] = row.minimal.certifier;
        e["focal_leaf_certified"] = row.focal.certified;
        e["focal_leaf_certifier"] = row.focal.certifier;
        entries.push_back(e);
    }
    j["catalog"] = entries;
    j["tool_version"] = ACSCERT_VERSION_STRING;
    return j.dump(2) + "\n";
}

std::string catalog_listing_text(const std::optional<std::string>& filter) {
    std::ostringstream out;
    out << "family                    params             (m1,m2)   minimal  focal\n";
    for (const auto& row : catalog_rows(filter)) {
        std::ostringstream params;
        for (std::size_t i = 0; i < row.params.size(); ++i) {
            if (i) params << ",";
            params << row.params[i].first << "=" << row.params[i].second;
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%-25s %-18s (%d,%d)%s   %-8s %s\n", row.tag.c_str(),
                      params.str().c_str(), row.m1, row.m2, row.exceptional ? "*" : " ",
                      row.minimal.certified ? "yes" : "no", row.focal.certified ? "yes" : "no");
        out << line;
    }
    out << "(* exceptional multiplicity ordering; minimal/focal = certified negative by the\n"
           " exact closed-form conditions alone. Minimal leaves with m1 < 5 may still be\n"
           " certified numerically via the quadratic-program route.)\n";
    return out.str();
}

}  // namespace acs
