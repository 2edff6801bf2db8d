#include "acs/sampling.hpp"

#include <cmath>

#include "acs/rng.hpp"

namespace acs {

namespace {

constexpr int kMaxRedraws = 64;
constexpr double kDegenerate = 1e-8;

template <class F>
Matrix<F> skew_hermitian_part(const Matrix<F>& a) {
    if (!a.square()) throw InvalidArgument("lie-algebra projection requires a square matrix");
    Matrix<F> s = a;
    s -= a.adjoint();
    s *= 0.5;
    return s;
}

}  // namespace

MatrixC project_su(const MatrixC& a) {
    MatrixC s = skew_hermitian_part(a);
    std::complex<double> t{};
    for (int i = 0; i < s.rows(); ++i) t += s(i, i);
    t /= static_cast<double>(s.rows());
    for (int i = 0; i < s.rows(); ++i) s(i, i) -= t;
    return s;
}

MatrixH project_sp(const MatrixH& a) { return skew_hermitian_part(a); }

MatrixC gaussian_matrix_c(int rows, int cols, Rng& rng) {
    MatrixC m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = {rng.gaussian(), rng.gaussian()};
    return m;
}

MatrixH gaussian_matrix_h(int rows, int cols, Rng& rng) {
    MatrixH m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    return m;
}

namespace {

// Gram-Schmidt pair construction in the Killing metric. Projection +
// normalization of rotation-invariant Gaussian draws gives the uniform
// distribution on the unit sphere of the algebra.
template <class F, class Project, class Draw>
std::pair<Matrix<F>, Matrix<F>> unit_pair(int n, std::uint64_t seed, const KillingMetric& metric,
                                          Project project, Draw draw) {
    Rng rng(stream_seed(seed, 0x414353u));  // private stream per sampler call
    Matrix<F> x(n, n);
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxRedraws)
            throw NumericalError("sample_unit_pair: degenerate draws exhausted retry budget");
        x = project(draw(n, n, rng));
        const double nx = killing_inner(x, x, metric);
        if (nx > kDegenerate) {
            x *= 1.0 / std::sqrt(nx);
            break;
        }
    }
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxRedraws)
            throw NumericalError("sample_unit_pair: degenerate draws exhausted retry budget");
        Matrix<F> nmat = project(draw(n, n, rng));
        nmat -= killing_inner(nmat, x, metric) * x;
        const double nn = killing_inner(nmat, nmat, metric);
        if (nn > kDegenerate) {
            nmat *= 1.0 / std::sqrt(nn);
            return {x, nmat};
        }
    }
}

}  // namespace

std::pair<MatrixC, MatrixC> sample_su_pair(int n, std::uint64_t seed) {
    return unit_pair<std::complex<double>>(
        n, seed, KillingMetric::su(n), [](const MatrixC& a) { return project_su(a); },
        gaussian_matrix_c);
}

std::pair<MatrixH, MatrixH> sample_sp_pair(int n, std::uint64_t seed) {
    return unit_pair<Quaternion>(
        n, seed, KillingMetric::sp(n), [](const MatrixH& a) { return project_sp(a); },
        gaussian_matrix_h);
}

std::pair<MatrixH, MatrixH> grassmann_sample_pair(int d, int n, std::uint64_t seed,
                                                  bool strict_trace) {
    if (d < 1 || d >= n) throw InvalidArgument("grassmann_sample_pair requires 1 <= d < n");
    const double c_n = 4.0 * (n + 1);
    const double target = 1.0 / (2.0 * c_n);
    Rng rng(stream_seed(seed, 0x475253u));

    MatrixH x(d, n - d);
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxRedraws)
            throw NumericalError("grassmann_sample_pair: degenerate draws exhausted retry budget");
        x = gaussian_matrix_h(d, n - d, rng);
        const double nx = re_frobenius_inner(x, x);
        if (nx > kDegenerate) {
            x *= std::sqrt(target / nx);
            break;
        }
    }
    for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxRedraws)
            throw NumericalError("grassmann_sample_pair: degenerate draws exhausted retry budget");
        MatrixH nm = gaussian_matrix_h(d, n - d, rng);
        if (strict_trace) {
            // Remove the full quaternionic trace component: tr((N - qX) X*) = 0
            // with q = tr(N X*) / tr(X X*).
            Quaternion t = trace(nm * x.adjoint());
            t *= 1.0 / re_frobenius_inner(x, x);
            nm -= scalar_mul(t, x);
        } else {
            nm -= (re_frobenius_inner(nm, x) / re_frobenius_inner(x, x)) * x;
        }
        const double nn = re_frobenius_inner(nm, nm);
        if (nn > kDegenerate * target) {
            nm *= std::sqrt(target / nn);
            return {x, nm};
        }
    }
}

}  // namespace acs
