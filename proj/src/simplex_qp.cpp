#include "acs/simplex_qp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace acs {

namespace {

constexpr double kConcavityTol = 1e-10;
constexpr double kFeasibilityTol = 1e-12;
constexpr double kPivotTol = 1e-12;
constexpr double kLsResidualTol = 1e-9;

// Dense linear solve with partial pivoting. Returns false when a pivot falls
// below kPivotTol relative to the matrix scale.
bool lu_solve(std::vector<double> m, std::vector<double> rhs, int n, std::vector<double>& out) {
    double scale = 0.0;
    for (double v : m) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return false;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m[r * n + col]) > std::fabs(m[piv * n + col])) piv = r;
        if (std::fabs(m[piv * n + col]) < kPivotTol * scale) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m[col * n + j], m[piv * n + j]);
            std::swap(rhs[col], rhs[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / m[col * n + col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int j = r + 1; j < n; ++j) s -= m[r * n + j] * out[j];
        out[r] = s / m[r * n + r];
    }
    return true;
}

// Least-squares fallback for singular stationarity systems: Householder QR
// with column pivoting, trailing rank-deficient block zeroed (basic solution).
void qr_least_squares(std::vector<double> m, std::vector<double> rhs, int n,
                      std::vector<double>& out) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    double scale = 0.0;
    for (double v : m) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) {
        out.assign(n, 0.0);
        return;
    }

    int rank = n;
    for (int k = 0; k < n; ++k) {
        int best = k;
        double best_norm = -1.0;
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < n; ++i) s += m[i * n + j] * m[i * n + j];
            if (s > best_norm) {
                best_norm = s;
                best = j;
            }
        }
        if (best != k) {
            for (int i = 0; i < n; ++i) std::swap(m[i * n + k], m[i * n + best]);
            std::swap(perm[k], perm[best]);
        }
        const double col_norm = std::sqrt(std::max(best_norm, 0.0));
        if (col_norm < kPivotTol * scale) {
            rank = k;
            break;
        }
        // Householder vector for column k.
        double alpha = -std::copysign(col_norm, m[k * n + k]);
        std::vector<double> v(n, 0.0);
        for (int i = k; i < n; ++i) v[i] = m[i * n + k];
        v[k] -= alpha;
        double vnorm_sq = 0.0;
        for (int i = k; i < n; ++i) vnorm_sq += v[i] * v[i];
        if (vnorm_sq > 0.0) {
            for (int j = k; j < n; ++j) {
                double dot = 0.0;
                for (int i = k; i < n; ++i) dot += v[i] * m[i * n + j];
                const double f = 2.0 * dot / vnorm_sq;
                for (int i = k; i < n; ++i) m[i * n + j] -= f * v[i];
            }
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * rhs[i];
            const double f = 2.0 * dot / vnorm_sq;
            for (int i = k; i < n; ++i) rhs[i] -= f * v[i];
        }
    }

    std::vector<double> z(n, 0.0);
    for (int r = rank - 1; r >= 0; --r) {
        double s = rhs[r];
        for (int j = r + 1; j < rank; ++j) s -= m[r * n + j] * z[j];
        z[r] = s / m[r * n + r];
    }
    out.assign(n, 0.0);
    for (int j = 0; j < rank; ++j) out[perm[j]] = z[j];
}

}  // namespace

SimplexQuadraticProgram::SimplexQuadraticProgram(int dim, double constant,
                                                 std::vector<double> linear,
                                                 std::vector<double> quadratic_row_major)
    : dim_(dim), constant_(constant), linear_(std::move(linear)),
      quad_(std::move(quadratic_row_major)) {
    if (dim_ < 1 || dim_ > 16) throw InvalidArgument("SimplexQuadraticProgram: dim out of range");
    if (static_cast<int>(linear_.size()) != dim_ ||
        static_cast<int>(quad_.size()) != dim_ * dim_)
        throw InvalidArgument("SimplexQuadraticProgram: coefficient size mismatch");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j) {
            const double s = 0.5 * (quad_[i * dim_ + j] + quad_[j * dim_ + i]);
            quad_[i * dim_ + j] = quad_[j * dim_ + i] = s;
        }
}

double SimplexQuadraticProgram::evaluate(const std::vector<double>& t) const {
    double v = constant_;
    for (int i = 0; i < dim_; ++i) {
        v += linear_[i] * t[i];
        double row = 0.0;
        for (int j = 0; j < dim_; ++j) row += quad_[i * dim_ + j] * t[j];
        v += t[i] * row;
    }
    return v;
}

std::vector<double> SimplexQuadraticProgram::gradient(const std::vector<double>& t) const {
    std::vector<double> g(linear_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) g[i] += 2.0 * quad_[i * dim_ + j] * t[j];
    return g;
}

double SimplexQuadraticProgram::gradient_bound() const {
    double l2 = 0.0;
    for (double v : linear_) l2 += v * v;
    double f2 = 0.0;
    for (double v : quad_) f2 += v * v;
    return std::sqrt(l2) + 2.0 * std::sqrt(f2);
}

std::vector<double> SimplexQuadraticProgram::quadratic_eigenvalues() const {
    std::vector<double> a = quad_;
    const int n = dim_;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

SimplexSolution maximize_over_simplex(const SimplexQuadraticProgram& prog) {
    const int g = prog.dim();
    const auto eig = prog.quadratic_eigenvalues();
    if (!eig.empty() && eig.back() > kConcavityTol)
        throw DomainError("maximize_over_simplex: quadratic part has positive eigenvalue " +
                          std::to_string(eig.back()) + "; objective is not concave");

    SimplexSolution best;
    bool have_best = false;

    // Faces ordered by size then lexicographically, so the first strict
    // maximum encountered realizes the tie-breaking rule.
    std::vector<std::vector<int>> faces;
    for (int size = 1; size <= g; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            faces.push_back(idx);
            int i = size - 1;
            while (i >= 0 && idx[i] == g - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    int evaluated = 0;
    double max_residual = 0.0;
    for (const auto& face : faces) {
        const int f = static_cast<int>(face.size());
        const int n = f + 1;
        // Stationarity of Q on the affine hull of the face:
        //   2 A_FF u - lambda 1 = -l_F,  1' u = 1.
        std::vector<double> m(n * n, 0.0), rhs(n, 0.0), sol;
        for (int r = 0; r < f; ++r) {
            for (int c = 0; c < f; ++c) m[r * n + c] = 2.0 * prog.quadratic(face[r], face[c]);
            m[r * n + f] = -1.0;
            m[f * n + r] = 1.0;
            rhs[r] = -prog.linear()[face[r]];
        }
        rhs[f] = 1.0;
        ++evaluated;

        bool solved = lu_solve(m, rhs, n, sol);
        if (!solved) {
            qr_least_squares(m, rhs, n, sol);
        }
        // Residual of the stationarity system at the candidate.
        double residual = 0.0;
        for (int r = 0; r < n; ++r) {
            double s = -rhs[r];
            for (int c = 0; c < n; ++c) s += m[r * n + c] * sol[c];
            residual = std::max(residual, std::fabs(s));
        }
        if (!solved && residual >= kLsResidualTol) continue;  // face defers to its sub-faces

        bool feasible = true;
        for (int r = 0; r < f; ++r)
            if (sol[r] < -kFeasibilityTol) {
                feasible = false;
                break;
            }
        if (!feasible) continue;

        std::vector<double> point(g, 0.0);
        double sum = 0.0;
        for (int r = 0; r < f; ++r) {
            point[face[r]] = std::max(sol[r], 0.0);
            sum += point[face[r]];
        }
        for (int r = 0; r < f; ++r) point[face[r]] /= sum;  // sum is 1 + O(1e-12)
        max_residual = std::max(max_residual, residual);
        const double value = prog.evaluate(point);
        if (!have_best || value > best.value) {
            best.value = value;
            best.point = point;
            best.face = face;
            best.stationarity_residual = residual;
            have_best = true;
        }
    }

    // Vertices always yield solvable 2x2 systems, so a maximizer exists.
    best.faces_evaluated = evaluated;
    best.max_kkt_residual = max_residual;
    return best;
}

GridOracleResult grid_oracle(const SimplexQuadraticProgram& prog, double step) {
    if (!(step > 0.0) || step > 0.25) throw InvalidArgument("grid_oracle: step must be in (0, 0.25]");
    const int g = prog.dim();
    const long long n = static_cast<long long>(std::ceil(1.0 / step - 1e-9));

    GridOracleResult result;
    result.resolution_bound = prog.gradient_bound() * step * std::sqrt(static_cast<double>(g));

    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> t(g, 0.0);
    bool first = true;
    // Enumerate compositions of n into g nonnegative parts (recursive lambda,
    // no type-erasure overhead: the grid at step 0.005 has ~1.4M points).
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == g - 1) {
            t[pos] = static_cast<double>(remaining) * inv_n;
            const double v = prog.evaluate(t);
            ++result.points_evaluated;
            if (first || v > result.value) {
                result.value = v;
                result.point = t;
                first = false;
            }
            return;
        }
        for (long long c = 0; c <= remaining; ++c) {
            t[pos] = static_cast<double>(c) * inv_n;
            self(self, pos + 1, remaining - c);
        }
    };
    rec(rec, 0, n);
    return result;
}

}  // namespace acs
