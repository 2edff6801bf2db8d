#pragma once

#include <cstdint>
#include <utility>

#include "acs/matrix.hpp"
#include "acs/rng.hpp"

namespace acs {

enum class GroupKind { SU, Sp };

/// Skew-Hermitian projection (A - A*)/2; for su(n) the (imaginary) trace is
/// removed as well. Idempotent, and exact up to rounding.
MatrixC project_su(const MatrixC& a);
MatrixH project_sp(const MatrixH& a);

/// Gaussian matrix with independent standard-normal components per real
/// dimension of the scalar field.
MatrixC gaussian_matrix_c(int rows, int cols, Rng& rng);
MatrixH gaussian_matrix_h(int rows, int cols, Rng& rng);

/// Killing-orthonormal pair (X, N) in the Lie algebra: |X| = |N| = 1 and
/// <X, N> = 0 within 1e-12, deterministic for a fixed seed. Throws
/// NumericalError after a bounded number of degenerate redraws.
std::pair<MatrixC, MatrixC> sample_su_pair(int n, std::uint64_t seed);
std::pair<MatrixH, MatrixH> sample_sp_pair(int n, std::uint64_t seed);

/// Pair of quaternionic d x (n-d) matrices with tr(XX*) = tr(NN*) = 1/(2 c_n),
/// c_n = 4(n+1), and Re tr(XN*) = 0. With strict_trace the full quaternionic
/// trace tr(XN*) is annihilated instead of just its real part; ambient
/// orthogonality in the Killing metric only forces the real part, so strict
/// mode is opt-in.
std::pair<MatrixH, MatrixH> grassmann_sample_pair(int d, int n, std::uint64_t seed,
                                                  bool strict_trace = false);

}  // namespace acs
