#pragma once

#include <optional>
#include <string>

#include "acs/certificate.hpp"
#include "acs/fkm.hpp"
#include "acs/sampling.hpp"

namespace acs {

struct RunOptions {
    std::uint64_t seed = 0;
    long long samples = 10000;
    bool with_grid_oracle = false;
    double grid_step = 0.01;
    int threads = 0;  // 0 = thread_cap()
    bool strict_trace = false;
};

/// Minimal isoparametric hypersurface with multiplicities (m1, m2), or its
/// codimension-(1 + m1) focal manifold when focal is set.
AcsCertificate verify_isoparametric(int m1, int m2, bool focal, const RunOptions& opt);

/// SU(n) or Sp(n) with the Killing metric in its matrix space.
AcsCertificate verify_group(GroupKind kind, int n, const RunOptions& opt);

/// Quaternionic Grassmannian of d-planes in H^n.
AcsCertificate verify_grassmannian(int d, int n, const RunOptions& opt);

/// Named catalog entry (homogeneous families, E6 orbit, FKM families).
AcsCertificate verify_catalog_entry(const ExampleFamily& family, const RunOptions& opt);

/// Constructs the Clifford system for (m, k), verifies its relations exactly,
/// and certifies the codimension-(1 + m1) focal leaf of the FKM foliation.
AcsCertificate verify_clifford(int m, int k, const RunOptions& opt);

/// Index-bound constants for a given ambient dimension. Carries no ACS
/// verdict, so it reports inconclusive.
AcsCertificate index_constants_certificate(long long dim);

/// Fixed-range summary of the example catalog with exact condition checks,
/// optionally filtered by family tag.
std::string catalog_listing_json(const std::optional<std::string>& family_filter);
std::string catalog_listing_text(const std::optional<std::string>& family_filter);

}  // namespace acs
