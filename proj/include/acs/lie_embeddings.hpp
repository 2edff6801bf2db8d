#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "acs/matrix.hpp"
#include "acs/sampling.hpp"

namespace acs {

/// Equivariant embedding of SU(n) or Sp(n) into its matrix space, or of the
/// quaternionic Grassmannian of d-planes in H^n into the traceless Hermitian
/// matrices, each with the Killing-form metric.
struct EmbeddingFamily {
    enum class Kind { SU, Sp, GrassmannH };

    Kind kind;
    int n = 0;
    int d = 0;  // Grassmannian only

    static EmbeddingFamily su(int n);
    static EmbeddingFamily sp(int n);
    static EmbeddingFamily grassmann_h(int d, int n);

    /// Einstein constant: Ric = E g (1/4 for the groups, 1/2 here).
    double einstein() const;
    double c_n() const;       // 2n complex, 4(n+1) quaternionic
    long long dim() const;    // n^2-1, n(2n+1), 4d(n-d)
    double radius_sq() const; // n c_n for groups, c_n d(n-d)/n
    /// Closed forms -1/n^2, -1/(2(n+1)), -2/(n+1).
    double constant_term() const;
    /// The same constant computed as -4E + 2 dim / r^2.
    double constant_term_general() const;
    /// Real dimension of the ambient Euclidean space.
    long long ambient_dim() const;
    std::string tag() const;
};

/// Closed-form ACS value at a constrained pair:
///   SU(n):  -1/n^2      - <NX, XN> - |N^2|^2        (Killing inner products)
///   Sp(n):  -1/(2(n+1)) - <NX, XN> - |N^2|^2
///   Gr(d,n): -2/(n+1) - 8 c_n Re tr(X N* X N* + N N* N N*)
/// Constraint residuals beyond 1e-9 are rejected.
double acs_value(const EmbeddingFamily& family, const MatrixC& x, const MatrixC& n_mat);
double acs_value(const EmbeddingFamily& family, const MatrixH& x, const MatrixH& n_mat);

/// Second fundamental form of a group embedding: II(X, Y) = (XY + YX)/2.
template <class F>
Matrix<F> build_group_sff(const Matrix<F>& x, const Matrix<F>& y) {
    Matrix<F> s = x * y + y * x;
    s *= 0.5;
    return s;
}

/// Second fundamental form of the Grassmannian embedding at the base point:
/// the n x n block matrix -diag(X N* + N X*, -(X* N + N* X)).
MatrixH build_grassmann_sff(int d, int n, const MatrixH& x, const MatrixH& n_mat);

/// ACS through the explicit second fundamental form and the Einstein
/// minimal-in-sphere reduction
///   constant_term - 2 |II(X,N)|^2 - |II(N,N)|^2 + <II(N,N), II(X,X)>,
/// an independent route used to cross-check the closed forms above.
double acs_via_sff(const EmbeddingFamily& family, const MatrixC& x, const MatrixC& n_mat);
double acs_via_sff(const EmbeddingFamily& family, const MatrixH& x, const MatrixH& n_mat);

/// Pair (X, N) in su(n) with its construction tag and achieved value; the
/// meaning of value depends on the construction (trace-normalized objective
/// for the minimizer, ACS value for witnesses).
struct MinimizerWitness {
    MatrixC x;
    MatrixC n_mat;
    double value = 0.0;
    std::string construction;
};

/// a_n closed form (2 - n)/(8n) for even n.
double a_n_closed(int n);

/// Exact minimizer of tr((XN)^2 + N^4) on {tr X^2 = tr N^2 = -1, tr XN = 0}
/// for even n: N = i diag(z) with two entries +-sqrt((n+2)/(4n)) and the rest
/// alternating -+sqrt(1/(2n)); X supported on the first 2x2 block with
/// |X_12|^2 = 1/2. Throws for odd n.
MinimizerWitness explicit_even_minimizer(int n);

/// Upper estimate of a_n by seeded random restarts plus projected descent in
/// the diagonalized-N variables; reaches the closed form for even n and lands
/// in the monotonicity bracket [a_{n+1}, a_{n-1}] for odd n.
double estimate_a_n(int n, int restarts, std::uint64_t seed);

/// b_n = (18 - n)/(16 n^2) for even n: positive iff ACS < 0 holds for SU(n).
double b_n_closed(int n);

/// Killing-normalized pair in su(n) whose ACS value equals -b_n > 0 for even
/// n > 18 (an explicit failure of the negativity condition).
MinimizerWitness positive_witness(int n);

/// Witness for any n > 18: the even construction, padded by a zero row and
/// column for odd n (su(n-1) embeds in su(n) preserving all constraints).
MinimizerWitness su_witness_any(int n);

struct SweepResult {
    double min_value = 0.0;
    long long samples = 0;
};

/// Empirical minimum of acs_value over constrained random pairs;
/// deterministic for a fixed seed independently of the thread count.
SweepResult sample_min_acs(const EmbeddingFamily& family, long long samples, std::uint64_t seed,
                           int threads, bool strict_trace = false);

}  // namespace acs
