#pragma once

#include "acs/rational.hpp"

namespace acs {

/// 1 / C(d, 2) = 2 / (d (d - 1)): the per-Betti-number index constant for an
/// immersion into R^d with everywhere-negative ACS quantity. Requires d >= 2.
Rational acs_index_constant(long long d);

/// 8 / (d (d + 3) (d^2 + 3d - 2)): the metric-perturbation-robust constant.
/// Identically equal to acs_index_constant(veronese_dim(d)). Requires d >= 1.
Rational robust_index_constant(long long d);

/// Target dimension d + d(d+1)/2 = d(d+3)/2 of the quadratic (Veronese)
/// embedding of R^d used to make a spherical immersion free.
long long veronese_dim(long long d);

/// Certificate payload; the acs string is empty when d < 2 leaves the plain
/// constant undefined.
struct IndexConstants {
    std::string acs;
    std::string robust;
    long long ambient_dim = 0;
};

IndexConstants make_index_constants(long long ambient_dim);

}  // namespace acs
