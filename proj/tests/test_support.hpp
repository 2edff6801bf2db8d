#pragma once

// Shared helpers for the test binaries: random problem generators and the
// independent oracles (brute-force contractions, orthonormal bases, frame
// decompositions) that the library results are checked against. Everything
// here avoids the code paths it is used to verify.

#include <array>
#include <cmath>
#include <vector>

#include "acs/isoparametric.hpp"
#include "acs/matrix.hpp"
#include "acs/rng.hpp"
#include "acs/simplex_qp.hpp"

namespace acs::test {

// Random concave program on the 3-simplex: quadratic part -B'B is negative
// semidefinite by construction.
inline SimplexQuadraticProgram random_concave_program(Rng& rng, int dim = 4) {
    std::vector<double> b(dim * dim), quad(dim * dim, 0.0), linear(dim);
    for (auto& v : b) v = rng.gaussian();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += b[k * dim + i] * b[k * dim + j];
            quad[i * dim + j] = -s;
        }
    for (auto& v : linear) v = 3.0 * rng.gaussian();
    return SimplexQuadraticProgram(dim, rng.gaussian(), std::move(linear), std::move(quad));
}

// Random unit vector in R^n.
inline std::vector<double> random_unit(int n, Rng& rng) {
    std::vector<double> v(n);
    double norm_sq = 0.0;
    for (double& x : v) {
        x = rng.gaussian();
        norm_sq += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& x : v) x *= inv;
    return v;
}

// Random orthonormal pair in R^n.
inline std::pair<std::vector<double>, std::vector<double>> random_orthonormal_pair(int n,
                                                                                   Rng& rng) {
    const std::vector<double> x = random_unit(n, rng);
    std::vector<double> y(n);
    for (;;) {
        double dot = 0.0, norm_sq = 0.0;
        for (int i = 0; i < n; ++i) y[i] = rng.gaussian();
        for (int i = 0; i < n; ++i) dot += x[i] * y[i];
        for (int i = 0; i < n; ++i) {
            y[i] -= dot * x[i];
            norm_sq += y[i] * y[i];
        }
        if (norm_sq > 1e-8) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& v : y) v *= inv;
            return {x, y};
        }
    }
}

// Squared norms of the components of v in the four curvature distributions
// (frame blocks of sizes m1, m2, m1, m2).
inline Simplex4 distribution_weights(const std::vector<double>& v, const Multiplicities& m) {
    Simplex4 w{0.0, 0.0, 0.0, 0.0};
    const std::array<int, 4> sizes{m.m1, m.m2, m.m1, m.m2};
    int pos = 0;
    for (int block = 0; block < 4; ++block)
        for (int i = 0; i < sizes[block]; ++i, ++pos) w[block] += v[pos] * v[pos];
    return w;
}

// Gauss-equation contraction Ric(X, X) = <II(X,X), H> - |II(X,.)|^2 computed
// directly from the dense tensor; independent of ricci_eigenvalues.
inline double ricci_from_sff(const SffTensor& sff, const Vec2& h, const std::vector<double>& x) {
    const Vec2 ii_xx = sff.apply(x, x);
    return dot2(ii_xx, h) - sff.row_norm_sq(x);
}

// Killing-orthonormal basis of su(n): normalized E_jk - E_kj, i(E_jk + E_kj),
// and traceless imaginary diagonals.
inline std::vector<MatrixC> su_basis(int n) {
    std::vector<MatrixC> basis;
    const double off = 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            MatrixC a(n, n), b(n, n);
            a(j, k) = {off, 0.0};
            a(k, j) = {-off, 0.0};
            b(j, k) = {0.0, off};
            b(k, j) = {0.0, off};
            basis.push_back(a);
            basis.push_back(b);
        }
    for (int l = 1; l < n; ++l) {
        MatrixC d(n, n);
        const double scale = 1.0 / std::sqrt(2.0 * n * l * (l + 1.0));
        for (int i = 0; i < l; ++i) d(i, i) = {0.0, scale};
        d(l, l) = {0.0, -scale * l};
        basis.push_back(d);
    }
    return basis;
}

// Killing-orthonormal basis of sp(n): quaternion-unit off-diagonal pairs and
// imaginary diagonal entries.
inline std::vector<MatrixH> sp_basis(int n) {
    std::vector<MatrixH> basis;
    const std::array<Quaternion, 4> units{Quaternion(1), Quaternion::i(), Quaternion::j(),
                                          Quaternion::k()};
    const double off = 1.0 / std::sqrt(8.0 * (n + 1.0));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (const auto& u : units) {
                MatrixH a(n, n);
                a(j, k) = u * off;
                a(k, j) = u.conj() * (-off);
                basis.push_back(a);
            }
    const double diag = 1.0 / (2.0 * std::sqrt(n + 1.0));
    for (int j = 0; j < n; ++j)
        for (int u = 1; u < 4; ++u) {
            MatrixH a(n, n);
            a(j, j) = units[u] * diag;
            basis.push_back(a);
        }
    return basis;
}

// Killing-orthonormal basis of the Grassmannian horizontal space, as the raw
// d x (n-d) quaternionic blocks.
inline std::vector<MatrixH> grassmann_basis(int d, int n) {
    std::vector<MatrixH> basis;
    const std::array<Quaternion, 4> units{Quaternion(1), Quaternion::i(), Quaternion::j(),
                                          Quaternion::k()};
    const double scale = 1.0 / std::sqrt(8.0 * (n + 1.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n - d; ++j)
            for (const auto& u : units) {
                MatrixH a(d, n - d);
                a(i, j) = u * scale;
                basis.push_back(a);
            }
    return basis;
}

}  // namespace acs::test
