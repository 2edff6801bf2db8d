#include "acs/isoparametric.hpp"

#include <cmath>
#include <string>

#include "acs/error.hpp"

namespace acs {

Multiplicities::Multiplicities(int m1_, int m2_) : m1(m1_), m2(m2_) {
    if (m1 < 1 || m2 < m1)
        throw InvalidArgument("Multiplicities require 1 <= m1 <= m2, got (" +
                              std::to_string(m1) + ", " + std::to_string(m2) + ")");
}

const std::array<Vec2, 4>& CurvatureNormalSystem::alphas() {
    static const std::array<Vec2, 4> roots{Vec2{1.0, -1.0}, Vec2{1.0, 0.0}, Vec2{1.0, 1.0},
                                           Vec2{0.0, 1.0}};
    return roots;
}

double minimal_angle(const Multiplicities& m) {
    return 0.5 * std::atan(std::sqrt(static_cast<double>(m.m2) / m.m1));
}

double volume_profile(const Multiplicities& m, double theta) {
    if (!(theta > 0.0) || !(theta < 0.78539816339744830962))
        throw InvalidArgument("volume_profile: theta must lie in (0, pi/4)");
    return std::pow(std::cos(2.0 * theta), m.m1) * std::pow(std::sin(2.0 * theta), m.m2) /
           std::pow(2.0, m.m2);
}

CurvatureNormalSystem curvature_normals_at(double theta) {
    if (!(theta > 0.0) || !(theta < 0.78539816339744830962))
        throw InvalidArgument("curvature_normals_at: theta must lie in (0, pi/4)");
    CurvatureNormalSystem sys;
    sys.theta = theta;
    sys.p = {std::cos(theta), std::sin(theta)};
    const auto& roots = CurvatureNormalSystem::alphas();
    for (int i = 0; i < 4; ++i) {
        const double denom = dot2(roots[i], sys.p);
        sys.xi[i] = {-roots[i][0] / denom, -roots[i][1] / denom};
    }
    return sys;
}

CurvatureNormalSystem curvature_normals(const Multiplicities& m) {
    return curvature_normals_at(minimal_angle(m));
}

double acs_prime(const CurvatureNormalSystem& sys, const Multiplicities& m, const Simplex4& s,
                 const Simplex4& t) {
    double v = -2.0 * m.n();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) v += (s[i] - t[i]) * t[j] * sys.gram(i, j);
        v += 2.0 * (s[i] + t[i]) * sys.norm_sq(i);
    }
    return v;
}

double acs_prime_general(const CurvatureNormalSystem& sys, const std::array<int, 4>& mult,
                         const Simplex4& s, const Simplex4& t) {
    double v = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            v += (-static_cast<double>(mult[i]) * (s[j] + t[j]) + (s[i] - t[i]) * t[j]) *
                 sys.gram(i, j);
        v += 2.0 * (s[i] + t[i]) * sys.norm_sq(i);
    }
    return v;
}

SimplexQuadraticProgram acs_vertex_program(const CurvatureNormalSystem& sys,
                                           const Multiplicities& m, int vertex) {
    if (vertex < 0 || vertex > 3) throw InvalidArgument("acs_vertex_program: vertex in 0..3");
    // ACS'(e_k, t) = (-2n + 2 w_k) + (G e_k + 2 w) . t - t' G t  with
    // G the Gram matrix of the xi_i and w_i = |xi_i|^2.
    std::vector<double> linear(4), quad(16);
    for (int i = 0; i < 4; ++i) {
        linear[i] = sys.gram(vertex, i) + 2.0 * sys.norm_sq(i);
        for (int j = 0; j < 4; ++j) quad[i * 4 + j] = -sys.gram(i, j);
    }
    const double constant = -2.0 * m.n() + 2.0 * sys.norm_sq(vertex);
    return SimplexQuadraticProgram(4, constant, std::move(linear), std::move(quad));
}

MaxAcsResult max_acs(const Multiplicities& m) {
    const CurvatureNormalSystem sys = curvature_normals(m);
    MaxAcsResult result;
    result.upper_bound_only = (m.m1 == 1);
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const SimplexSolution sol = maximize_over_simplex(acs_vertex_program(sys, m, k));
        result.faces_evaluated += sol.faces_evaluated;
        result.max_kkt_residual = std::max(result.max_kkt_residual, sol.max_kkt_residual);
        if (first || sol.value > result.value) {
            result.value = sol.value;
            result.s_vertex = k;
            for (int i = 0; i < 4; ++i) result.t[i] = sol.point[i];
            first = false;
        }
    }
    return result;
}

int smallest_negative_m2(int m1, int m2_max) {
    for (int m2 = m1; m2 <= m2_max; ++m2)
        if (max_acs(Multiplicities(m1, m2)).value < 0.0) return m2;
    return 0;
}

double simple_upper_bound(const Multiplicities& m) {
    const double total = m.m1 + m.m2;
    return -2.0 * m.n() +
           10.0 * total / m.m1 * (1.0 + std::sqrt(static_cast<double>(m.m2) / total));
}

std::array<double, 4> ricci_eigenvalues(const CurvatureNormalSystem& sys,
                                        const Multiplicities& m) {
    const std::array<int, 4> mult{m.m1, m.m2, m.m1, m.m2};
    Vec2 h{0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        h[0] += mult[i] * sys.xi[i][0];
        h[1] += mult[i] * sys.xi[i][1];
    }
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) lambda[i] = dot2(sys.xi[i], h) - sys.norm_sq(i);
    return lambda;
}

double extreme_sectional(const CurvatureNormalSystem& sys) { return sys.gram(0, 3); }

double focal_acs_upper(int m1, int m2) { return -2.0 * (m1 + 2.0 * m2) + 10.0 + 5.0 * m1; }

double focal_acs_upper(const Multiplicities& m) { return focal_acs_upper(m.m1, m.m2); }

bool focal_acs_negative(int m1, int m2) { return 4LL * m2 > 3LL * m1 + 10LL; }

double focal_ricci_lower(const Multiplicities& m) { return 2.0 * m.m2 - 2.0; }

int SffTensor::distribution(int j) const {
    if (j < m1_) return 0;
    if (j < m1_ + m2_) return 1;
    if (j < 2 * m1_ + m2_) return 2;
    return 3;
}

Vec2 SffTensor::apply(const std::vector<double>& x, const std::vector<double>& y) const {
    Vec2 out{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        if (x[j] == 0.0) continue;
        for (int k = 0; k < n; ++k) {
            const Vec2& e = at(j, k);
            out[0] += x[j] * y[k] * e[0];
            out[1] += x[j] * y[k] * e[1];
        }
    }
    return out;
}

double SffTensor::row_norm_sq(const std::vector<double>& x) const {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        Vec2 col{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            const Vec2& e = at(j, k);
            col[0] += x[j] * e[0];
            col[1] += x[j] * e[1];
        }
        s += dot2(col, col);
    }
    return s;
}

SffTensor build_sff(const CurvatureNormalSystem& sys, const Multiplicities& m) {
    SffTensor sff;
    sff.n = m.n();
    sff.m1_ = m.m1;
    sff.m2_ = m.m2;
    sff.entries.assign(static_cast<std::size_t>(sff.n) * sff.n, Vec2{0.0, 0.0});
    for (int j = 0; j < sff.n; ++j) sff.at(j, j) = sys.xi[sff.distribution(j)];
    return sff;
}

double acs_from_sff(const SffTensor& sff, const Vec2& mean_curvature,
                    const std::vector<double>& x, const std::vector<double>& n_vec) {
    if (static_cast<int>(x.size()) != sff.n || static_cast<int>(n_vec.size()) != sff.n)
        throw InvalidArgument("acs_from_sff: tangent vector dimension mismatch");
    double nx = 0.0, nn = 0.0, xn = 0.0;
    for (int i = 0; i < sff.n; ++i) {
        nx += x[i] * x[i];
        nn += n_vec[i] * n_vec[i];
        xn += x[i] * n_vec[i];
    }
    if (std::fabs(nx - 1.0) > 1e-9 || std::fabs(nn - 1.0) > 1e-9 || std::fabs(xn) > 1e-9)
        throw InvalidArgument("acs_from_sff: (X, N) must be an orthonormal pair");

    const Vec2 ii_xx = sff.apply(x, x);
    const Vec2 ii_nn = sff.apply(n_vec, n_vec);
    const Vec2 ii_xn = sff.apply(x, n_vec);
    double v = -dot2(mean_curvature, {ii_xx[0] + ii_nn[0], ii_xx[1] + ii_nn[1]});
    v += 2.0 * sff.row_norm_sq(x) + 2.0 * sff.row_norm_sq(n_vec);
    v += dot2(ii_xx, ii_nn);
    v -= 2.0 * dot2(ii_xn, ii_xn);
    v -= dot2(ii_nn, ii_nn);
    return v;
}

}  // namespace acs
