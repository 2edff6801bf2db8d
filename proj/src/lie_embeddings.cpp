#include "acs/lie_embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <vector>

#include "acs/parallel.hpp"
#include "acs/rng.hpp"

namespace acs {

EmbeddingFamily EmbeddingFamily::su(int n) {
    if (n < 2) throw InvalidArgument("EmbeddingFamily::su requires n >= 2");
    return {Kind::SU, n, 0};
}

EmbeddingFamily EmbeddingFamily::sp(int n) {
    if (n < 1) throw InvalidArgument("EmbeddingFamily::sp requires n >= 1");
    return {Kind::Sp, n, 0};
}

EmbeddingFamily EmbeddingFamily::grassmann_h(int d, int n) {
    if (d < 1 || d >= n) throw InvalidArgument("EmbeddingFamily::grassmann_h requires 1 <= d < n");
    return {Kind::GrassmannH, n, d};
}

double EmbeddingFamily::einstein() const { return kind == Kind::GrassmannH ? 0.5 : 0.25; }

double EmbeddingFamily::c_n() const {
    return kind == Kind::SU ? 2.0 * n : 4.0 * (n + 1);
}

long long EmbeddingFamily::dim() const {
    switch (kind) {
        case Kind::SU: return static_cast<long long>(n) * n - 1;
        case Kind::Sp: return static_cast<long long>(n) * (2LL * n + 1);
        case Kind::GrassmannH: return 4LL * d * (n - d);
    }
    return 0;
}

double EmbeddingFamily::radius_sq() const {
    if (kind == Kind::GrassmannH) return c_n() * d * (n - d) / static_cast<double>(n);
    return n * c_n();
}

double EmbeddingFamily::constant_term() const {
    switch (kind) {
        case Kind::SU: return -1.0 / (static_cast<double>(n) * n);
        case Kind::Sp: return -1.0 / (2.0 * (n + 1));
        case Kind::GrassmannH: return -2.0 / (n + 1);
    }
    return 0.0;
}

double EmbeddingFamily::constant_term_general() const {
    return -4.0 * einstein() + 2.0 * static_cast<double>(dim()) / radius_sq();
}

long long EmbeddingFamily::ambient_dim() const {
    switch (kind) {
        case Kind::SU: return 2LL * n * n;
        case Kind::Sp: return 4LL * n * n;
        case Kind::GrassmannH: return 2LL * n * n - n - 1;  // traceless Hermitian H^{n x n}
    }
    return 0;
}

std::string EmbeddingFamily::tag() const {
    switch (kind) {
        case Kind::SU: return "su";
        case Kind::Sp: return "sp";
        case Kind::GrassmannH: return "grassmannian-h";
    }
    return {};
}

namespace {

constexpr double kConstraintTol = 1e-9;

template <class F>
void require_algebra_pair(const EmbeddingFamily& family, const Matrix<F>& x,
                          const Matrix<F>& n_mat, const KillingMetric& metric) {
    if (!x.square() || x.rows() != family.n)
        throw InvalidArgument("acs_value: matrix size does not match the family");
    x.require_same_shape(n_mat, "acs_value");
    Matrix<F> sx = x + x.adjoint();
    Matrix<F> sn = n_mat + n_mat.adjoint();
    if (frobenius_norm_sq(sx) > kConstraintTol || frobenius_norm_sq(sn) > kConstraintTol)
        throw InvalidArgument("acs_value: inputs are not skew-Hermitian");
    if (family.kind == EmbeddingFamily::Kind::SU &&
        (field_traits<F>::abs_sq(trace(x)) > kConstraintTol ||
         field_traits<F>::abs_sq(trace(n_mat)) > kConstraintTol))
        throw InvalidArgument("acs_value: su(n) elements must be traceless");
    if (std::fabs(killing_inner(x, x, metric) - 1.0) > kConstraintTol ||
        std::fabs(killing_inner(n_mat, n_mat, metric) - 1.0) > kConstraintTol ||
        std::fabs(killing_inner(x, n_mat, metric)) > kConstraintTol)
        throw InvalidArgument("acs_value: pair violates |X| = |N| = 1, <X,N> = 0");
}

double group_acs(const EmbeddingFamily& family, const KillingMetric& metric, const auto& x,
                 const auto& n_mat) {
    require_algebra_pair(family, x, n_mat, metric);
    const auto nx = n_mat * x;
    const auto xn = x * n_mat;
    const auto n2 = n_mat * n_mat;
    return family.constant_term() - killing_inner(nx, xn, metric) -
           killing_inner(n2, n2, metric);
}

void require_grassmann_pair(const EmbeddingFamily& family, const MatrixH& x,
                            const MatrixH& n_mat) {
    if (x.rows() != family.d || x.cols() != family.n - family.d)
        throw InvalidArgument("acs_value: Grassmannian matrices must be d x (n-d)");
    x.require_same_shape(n_mat, "acs_value");
    const double target = 1.0 / (2.0 * family.c_n());
    if (std::fabs(re_frobenius_inner(x, x) - target) > kConstraintTol ||
        std::fabs(re_frobenius_inner(n_mat, n_mat) - target) > kConstraintTol ||
        std::fabs(re_frobenius_inner(x, n_mat)) > kConstraintTol)
        throw InvalidArgument(
            "acs_value: pair violates tr(XX*) = tr(NN*) = 1/(2c_n), Re tr(XN*) = 0");
}

}  // namespace

double acs_value(const EmbeddingFamily& family, const MatrixC& x, const MatrixC& n_mat) {
    if (family.kind != EmbeddingFamily::Kind::SU)
        throw InvalidArgument("acs_value: complex matrices are only valid for SU(n)");
    return group_acs(family, KillingMetric::su(family.n), x, n_mat);
}

double acs_value(const EmbeddingFamily& family, const MatrixH& x, const MatrixH& n_mat) {
    if (family.kind == EmbeddingFamily::Kind::Sp)
        return group_acs(family, KillingMetric::sp(family.n), x, n_mat);
    if (family.kind != EmbeddingFamily::Kind::GrassmannH)
        throw InvalidArgument("acs_value: quaternionic matrices need an Sp or Grassmannian family");
    require_grassmann_pair(family, x, n_mat);
    const MatrixH xn = x * n_mat.adjoint();
    const MatrixH nn = n_mat * n_mat.adjoint();
    return family.constant_term() -
           8.0 * family.c_n() * (re_trace(xn * xn) + re_trace(nn * nn));
}

MatrixH build_grassmann_sff(int d, int n, const MatrixH& x, const MatrixH& n_mat) {
    if (x.rows() != d || x.cols() != n - d)
        throw InvalidArgument("build_grassmann_sff: matrices must be d x (n-d)");
    x.require_same_shape(n_mat, "build_grassmann_sff");
    const MatrixH top = x * n_mat.adjoint() + n_mat * x.adjoint();
    const MatrixH bottom = x.adjoint() * n_mat + n_mat.adjoint() * x;
    MatrixH out(n, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = -top(i, j);
    for (int i = 0; i < n - d; ++i)
        for (int j = 0; j < n - d; ++j) out(d + i, d + j) = bottom(i, j);
    return out;
}

namespace {

template <class F>
double sff_route(const EmbeddingFamily& family, const KillingMetric& metric, const Matrix<F>& ii_xx,
                 const Matrix<F>& ii_nn, const Matrix<F>& ii_xn) {
    return family.constant_term_general() - 2.0 * killing_inner(ii_xn, ii_xn, metric) -
           killing_inner(ii_nn, ii_nn, metric) + killing_inner(ii_nn, ii_xx, metric);
}

}  // namespace

double acs_via_sff(const EmbeddingFamily& family, const MatrixC& x, const MatrixC& n_mat) {
    if (family.kind != EmbeddingFamily::Kind::SU)
        throw InvalidArgument("acs_via_sff: complex matrices are only valid for SU(n)");
    return sff_route(family, KillingMetric::su(family.n), build_group_sff(x, x),
                     build_group_sff(n_mat, n_mat), build_group_sff(x, n_mat));
}

double acs_via_sff(const EmbeddingFamily& family, const MatrixH& x, const MatrixH& n_mat) {
    if (family.kind == EmbeddingFamily::Kind::Sp)
        return sff_route(family, KillingMetric::sp(family.n), build_group_sff(x, x),
                         build_group_sff(n_mat, n_mat), build_group_sff(x, n_mat));
    if (family.kind != EmbeddingFamily::Kind::GrassmannH)
        throw InvalidArgument("acs_via_sff: quaternionic matrices need an Sp or Grassmannian family");
    const KillingMetric metric{ScalarField::Quaternionic, family.n, family.c_n()};
    return sff_route(family, metric, build_grassmann_sff(family.d, family.n, x, x),
                     build_grassmann_sff(family.d, family.n, n_mat, n_mat),
                     build_grassmann_sff(family.d, family.n, x, n_mat));
}

double a_n_closed(int n) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("a_n_closed is defined for even n >= 2");
    return (2.0 - n) / (8.0 * n);
}

MinimizerWitness explicit_even_minimizer(int n) {
    if (n < 2 || n % 2 != 0)
        throw InvalidArgument("explicit_even_minimizer requires even n >= 2");
    const double big = std::sqrt((n + 2.0) / (4.0 * n));
    const double small = std::sqrt(1.0 / (2.0 * n));

    MinimizerWitness w;
    w.construction = "explicit-even-n";
    w.n_mat = MatrixC(n, n);
    std::vector<double> z(n);
    z[0] = -big;
    z[1] = big;
    for (int i = 2; i < n; ++i) z[i] = (i % 2 == 0) ? -small : small;
    for (int i = 0; i < n; ++i) w.n_mat(i, i) = {0.0, z[i]};

    w.x = MatrixC(n, n);
    const double e = std::sqrt(0.5);
    w.x(0, 1) = {e, 0.0};
    w.x(1, 0) = {-e, 0.0};

    const MatrixC xn = w.x * w.n_mat;
    w.value = re_trace(xn * xn) + re_trace(w.n_mat * w.n_mat * w.n_mat * w.n_mat);
    return w;
}

double b_n_closed(int n) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("b_n_closed is defined for even n >= 2");
    return (18.0 - n) / (16.0 * static_cast<double>(n) * n);
}

MinimizerWitness positive_witness(int n) {
    if (n <= 18 || n % 2 != 0)
        throw InvalidArgument("positive_witness requires even n > 18");
    MinimizerWitness w = explicit_even_minimizer(n);
    const double scale = 1.0 / std::sqrt(2.0 * n);
    w.x *= scale;
    w.n_mat *= scale;
    w.value = acs_value(EmbeddingFamily::su(n), w.x, w.n_mat);
    return w;
}

MinimizerWitness su_witness_any(int n) {
    if (n <= 18) throw InvalidArgument("su_witness_any requires n > 18");
    if (n % 2 == 0) return positive_witness(n);
    // su(n-1) embeds in su(n) as the upper-left block, preserving all trace
    // constraints; the padded even minimizer still realizes a positive value.
    MinimizerWitness inner = explicit_even_minimizer(n - 1);
    MinimizerWitness w;
    w.construction = "explicit-even-n-padded";
    w.x = MatrixC(n, n);
    w.n_mat = MatrixC(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) {
            w.x(i, j) = inner.x(i, j);
            w.n_mat(i, j) = inner.n_mat(i, j);
        }
    const double scale = 1.0 / std::sqrt(2.0 * n);
    w.x *= scale;
    w.n_mat *= scale;
    w.value = acs_value(EmbeddingFamily::su(n), w.x, w.n_mat);
    return w;
}

namespace {

// a_n search space after diagonalizing N: vectors z with sum 0 and norm 1;
// the inner minimization over X collapses to the extreme pair product, so the
// objective is f(z) = z_min z_max + sum z_k^4.
struct ZObjective {
    static double value(const std::vector<double>& z) {
        double zmin = z[0], zmax = z[0], quart = 0.0;
        for (double v : z) {
            zmin = std::min(zmin, v);
            zmax = std::max(zmax, v);
            quart += v * v * v * v;
        }
        return zmin * zmax + quart;
    }

    static std::vector<double> projected_gradient(const std::vector<double>& z) {
        const int n = static_cast<int>(z.size());
        int imin = 0, imax = 0;
        for (int i = 1; i < n; ++i) {
            if (z[i] < z[imin]) imin = i;
            if (z[i] > z[imax]) imax = i;
        }
        std::vector<double> g(n);
        for (int i = 0; i < n; ++i) g[i] = 4.0 * z[i] * z[i] * z[i];
        g[imin] += z[imax];
        g[imax] += z[imin];
        double mean = std::accumulate(g.begin(), g.end(), 0.0) / n;
        for (double& v : g) v -= mean;
        double along = std::inner_product(g.begin(), g.end(), z.begin(), 0.0);
        for (int i = 0; i < n; ++i) g[i] -= along * z[i];
        return g;
    }

    static void retract(std::vector<double>& z) {
        const double mean = std::accumulate(z.begin(), z.end(), 0.0) / z.size();
        for (double& v : z) v -= mean;
        const double norm = std::sqrt(std::inner_product(z.begin(), z.end(), z.begin(), 0.0));
        if (norm < 1e-12) throw NumericalError("estimate_a_n: degenerate retraction");
        for (double& v : z) v /= norm;
    }
};

double descend(std::vector<double> z) {
    constexpr double kGradTol = 1e-10;
    double f = ZObjective::value(z);
    for (int iter = 0; iter < 20000; ++iter) {
        const std::vector<double> g = ZObjective::projected_gradient(z);
        const double gnorm_sq = std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
        if (std::sqrt(gnorm_sq) < kGradTol) break;
        double step = 0.1;
        bool moved = false;
        while (step > 1e-16) {
            std::vector<double> trial = z;
            for (std::size_t i = 0; i < trial.size(); ++i) trial[i] -= step * g[i];
            ZObjective::retract(trial);
            const double ft = ZObjective::value(trial);
            if (ft < f - 1e-4 * step * gnorm_sq) {
                z = std::move(trial);
                f = ft;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;  // kink or stationary point at tolerance
    }
    return f;
}

std::vector<double> even_pattern(int n) {
    std::vector<double> z(n);
    const double big = std::sqrt((n + 2.0) / (4.0 * n));
    const double small = std::sqrt(1.0 / (2.0 * n));
    z[0] = -big;
    z[1] = big;
    for (int i = 2; i < n; ++i) z[i] = (i % 2 == 0) ? -small : small;
    return z;
}

}  // namespace

double estimate_a_n(int n, int restarts, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("estimate_a_n requires n >= 2");
    if (restarts < 1) throw InvalidArgument("estimate_a_n requires at least one restart");

    // Warm start from the known even-n pattern (padded with a zero for odd n,
    // which stays feasible and achieves a_{n-1}).
    std::vector<double> warm;
    if (n % 2 == 0) {
        warm = even_pattern(n);
    } else {
        warm = even_pattern(n - 1);
        warm.push_back(0.0);
    }
    double best = descend(warm);

    for (int r = 1; r < restarts; ++r) {
        Rng rng(stream_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<double> z(n);
        for (;;) {
            for (double& v : z) v = rng.gaussian();
            const double mean = std::accumulate(z.begin(), z.end(), 0.0) / n;
            double norm_sq = 0.0;
            for (double& v : z) {
                v -= mean;
                norm_sq += v * v;
            }
            if (norm_sq > 1e-12) break;
        }
        ZObjective::retract(z);
        best = std::min(best, descend(z));
    }
    return best;
}

SweepResult sample_min_acs(const EmbeddingFamily& family, long long samples, std::uint64_t seed,
                           int threads, bool strict_trace) {
    if (samples < 1) throw InvalidArgument("sample_min_acs requires samples >= 1");
    std::mutex merge_mutex;
    double global_min = std::numeric_limits<double>::infinity();
    parallel_chunks(samples, threads, [&](long long begin, long long end) {
        double local = std::numeric_limits<double>::infinity();
        for (long long i = begin; i < end; ++i) {
            const std::uint64_t s = stream_seed(seed, static_cast<std::uint64_t>(i));
            double v = 0.0;
            switch (family.kind) {
                case EmbeddingFamily::Kind::SU: {
                    const auto pair = sample_su_pair(family.n, s);
                    v = acs_value(family, pair.first, pair.second);
                    break;
                }
                case EmbeddingFamily::Kind::Sp: {
                    const auto pair = sample_sp_pair(family.n, s);
                    v = acs_value(family, pair.first, pair.second);
                    break;
                }
                case EmbeddingFamily::Kind::GrassmannH: {
                    const auto pair =
                        grassmann_sample_pair(family.d, family.n, s, strict_trace);
                    v = acs_value(family, pair.first, pair.second);
                    break;
                }
            }
            local = std::min(local, v);
        }
        const std::lock_guard<std::mutex> lock(merge_mutex);
        global_min = std::min(global_min, local);
    });
    SweepResult result;
    result.samples = samples;
    result.min_value = global_min;
    return result;
}

}  // namespace acs
