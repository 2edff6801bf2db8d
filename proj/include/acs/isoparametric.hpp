#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "acs/simplex_qp.hpp"

namespace acs {

using Vec2 = std::array<double, 2>;
using Simplex4 = std::array<double, 4>;

inline double dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

/// Multiplicity pair of a minimal isoparametric hypersurface of the sphere
/// with four principal curvatures; the distributions have dimensions
/// (m1, m2, m1, m2) and the hypersurface dimension is n = 2(m1 + m2).
struct Multiplicities {
    int m1;
    int m2;

    Multiplicities(int m1_, int m2_);
    int n() const { return 2 * (m1 + m2); }
};

/// The four curvature normals in the 2-plane section, evaluated at the point
/// p = (cos theta, sin theta): xi_i = -alpha_i / <alpha_i, p> for the fixed
/// roots alpha_1 = (1,-1), alpha_2 = (1,0), alpha_3 = (1,1), alpha_4 = (0,1).
struct CurvatureNormalSystem {
    double theta;
    Vec2 p;
    std::array<Vec2, 4> xi;

    static const std::array<Vec2, 4>& alphas();

    double gram(int i, int j) const { return dot2(xi[i], xi[j]); }
    double norm_sq(int i) const { return gram(i, i); }
};

/// Angle of the unique minimal leaf: (1/2) arctan(sqrt(m2/m1)), in (0, pi/4).
double minimal_angle(const Multiplicities& m);

/// Normalized volume of the parallel hypersurface at angle theta:
/// cos^{m1}(2 theta) sin^{m2}(2 theta) / 2^{m2}; maximal at minimal_angle.
double volume_profile(const Multiplicities& m, double theta);

/// System at an arbitrary angle in (0, pi/4).
CurvatureNormalSystem curvature_normals_at(double theta);

/// System at the minimal angle; satisfies sum m_i xi_i = -n p.
CurvatureNormalSystem curvature_normals(const Multiplicities& m);

/// ACS'(s, t) = -2n + sum_{ij} (s_i - t_i) t_j <xi_i, xi_j>
///            + 2 sum_i (s_i + t_i) |xi_i|^2   (minimal hypersurface form).
double acs_prime(const CurvatureNormalSystem& sys, const Multiplicities& m, const Simplex4& s,
                 const Simplex4& t);

/// ACS' without the minimality assumption: the -2n term is replaced by
/// -sum_{ij} m_i (s_j + t_j) <xi_i, xi_j> with explicit per-distribution
/// multiplicities.
double acs_prime_general(const CurvatureNormalSystem& sys, const std::array<int, 4>& mult,
                         const Simplex4& s, const Simplex4& t);

/// The concave quadratic in t obtained from ACS'(e_k, .) for s fixed at
/// vertex k; its quadratic part is minus the Gram matrix of the xi_i.
SimplexQuadraticProgram acs_vertex_program(const CurvatureNormalSystem& sys,
                                           const Multiplicities& m, int vertex);

struct MaxAcsResult {
    double value = 0.0;
    int s_vertex = 0;
    Simplex4 t{};
    /// True for m1 = 1 families, where the simplex reduction only bounds the
    /// maximum of ACS from above instead of attaining it.
    bool upper_bound_only = false;
    int faces_evaluated = 0;
    double max_kkt_residual = 0.0;
};

/// Maximum of ACS' over the product of simplices, by solving the four
/// concave vertex programs and keeping the best.
MaxAcsResult max_acs(const Multiplicities& m);

/// Multiplicity-only bound of the maximum:
/// -2n + (10 (m1+m2)/m1)(1 + sqrt(m2/(m1+m2))).
double simple_upper_bound(const Multiplicities& m);

/// Smallest m2 in [m1, m2_max] whose minimal leaf has max_acs < 0, or 0 when
/// none does. Numeric evidence for the large-m2 threshold at m1 = 4; never a
/// substitute for the exact m1 >= 5 condition.
int smallest_negative_m2(int m1, int m2_max);

/// Ricci eigenvalues <xi_i, H> - |xi_i|^2 (equal to n - |xi_i|^2 at the
/// minimal angle), one per curvature distribution.
std::array<double, 4> ricci_eigenvalues(const CurvatureNormalSystem& sys,
                                        const Multiplicities& m);

/// The realized sectional curvature <xi_1, xi_4> of a mixed plane; always
/// negative, and unbounded below along m2 -> infinity.
double extreme_sectional(const CurvatureNormalSystem& sys);

/// Closed-form bound for the ACS quantity of the codimension-(1+m1) focal
/// manifold: -2(m1 + 2 m2) + 10 + 5 m1. Plain arithmetic in the parts, no
/// ordering requirement.
double focal_acs_upper(int m1, int m2);
double focal_acs_upper(const Multiplicities& m);

/// Exact integer predicate: the focal bound is negative iff 4 m2 > 3 m1 + 10.
bool focal_acs_negative(int m1, int m2);

/// Lower bound 2 m2 - 2 for the focal manifold's Ricci curvature on unit
/// vectors; positive once m2 >= 2.
double focal_ricci_lower(const Multiplicities& m);

/// Dense second fundamental form of the hypersurface in an orthonormal frame
/// adapted to the curvature distributions (sizes m1, m2, m1, m2): entries
/// II[j][k] = delta_jk xi_{i(j)} with values in the 2-plane section.
struct SffTensor {
    int n = 0;
    int codim = 2;
    std::vector<Vec2> entries;  // row-major n x n

    const Vec2& at(int j, int k) const { return entries[static_cast<std::size_t>(j) * n + k]; }
    Vec2& at(int j, int k) { return entries[static_cast<std::size_t>(j) * n + k]; }

    /// Which distribution the j-th frame vector belongs to (0..3).
    int distribution(int j) const;

    Vec2 apply(const std::vector<double>& x, const std::vector<double>& y) const;
    /// Squared Frobenius norm of the map e_k -> II(x, e_k).
    double row_norm_sq(const std::vector<double>& x) const;

    Multiplicities mult() const { return {m1_, m2_}; }
    int m1_ = 0, m2_ = 0;
};

SffTensor build_sff(const CurvatureNormalSystem& sys, const Multiplicities& m);

/// Literal evaluation of the ACS quantity from a second fundamental form:
///   -<H, II(X,X) + II(N,N)> + 2 |II(X,.)|^2 + 2 |II(N,.)|^2
///   + <II(X,X), II(N,N)> - 2 |II(X,N)|^2 - |II(N,N)|^2
/// for unit orthogonal tangent vectors X, N (checked within 1e-9).
double acs_from_sff(const SffTensor& sff, const Vec2& mean_curvature,
                    const std::vector<double>& x, const std::vector<double>& n_vec);

}  // namespace acs
