#pragma once

#include <vector>

#include "acs/error.hpp"

namespace acs {

/// Concave quadratic objective Q(t) = constant + linear . t + t' * quadratic * t
/// to be maximized over the standard simplex {t_i >= 0, sum t_i = 1}.
/// The quadratic part is symmetrized at construction.
class SimplexQuadraticProgram {
public:
    SimplexQuadraticProgram(int dim, double constant, std::vector<double> linear,
                            std::vector<double> quadratic_row_major);

    int dim() const { return dim_; }
    double constant() const { return constant_; }
    const std::vector<double>& linear() const { return linear_; }
    double quadratic(int i, int j) const { return quad_[static_cast<std::size_t>(i) * dim_ + j]; }

    double evaluate(const std::vector<double>& t) const;
    std::vector<double> gradient(const std::vector<double>& t) const;

    /// Upper bound for ||grad Q||_2 on the simplex: ||linear||_2 + 2 ||quadratic||_F.
    double gradient_bound() const;

    /// Eigenvalues of the symmetric quadratic part, ascending (cyclic Jacobi).
    std::vector<double> quadratic_eigenvalues() const;

private:
    int dim_;
    double constant_;
    std::vector<double> linear_;
    std::vector<double> quad_;
};

struct SimplexSolution {
    double value = 0.0;
    std::vector<double> point;
    std::vector<int> face;  // active coordinate indices, ascending
    double stationarity_residual = 0.0;
    int faces_evaluated = 0;
    double max_kkt_residual = 0.0;  // residual of the winning face's KKT system
};

/// Global maximum of a concave quadratic over the simplex by enumerating all
/// 2^g - 1 nonempty faces and solving the equality-constrained stationarity
/// system on each face's affine hull. Ties between equal-valued faces go to
/// the smaller face, then lexicographic. Inputs with a positive eigenvalue
/// beyond 1e-10 are rejected with a DomainError.
SimplexSolution maximize_over_simplex(const SimplexQuadraticProgram& prog);

struct GridOracleResult {
    double value = 0.0;
    std::vector<double> point;
    /// The true maximum lies within [value, value + resolution_bound].
    double resolution_bound = 0.0;
    long long points_evaluated = 0;
};

/// Brute-force evaluation over all simplex grid points whose coordinates are
/// multiples of 1/N with N = ceil(1/step). Independent check for the face
/// enumeration; requires 0 < step <= 0.25.
GridOracleResult grid_oracle(const SimplexQuadraticProgram& prog, double step);

}  // namespace acs
