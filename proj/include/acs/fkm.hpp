#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acs/error.hpp"
#include "acs/rational.hpp"

namespace acs {

/// Square integer matrix for the exact Clifford-system arithmetic.
struct IntMatrix {
    int n = 0;
    std::vector<std::int64_t> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static IntMatrix identity(int n);
    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.n == y.n && x.a == y.a;
    }

    /// Kronecker product.
    static IntMatrix tensor(const IntMatrix& x, const IntMatrix& y);
    /// k-fold block-diagonal direct sum of the same block.
    static IntMatrix direct_sum(const IntMatrix& block, int copies);
};

/// Minimal l admitting a Clifford system of m+1 symmetric anticommuting
/// involutions on R^{2l}: delta(1..8) = 1,2,4,4,8,8,8,8 and
/// delta(m+8) = 16 delta(m).
long long delta(int m);

struct FkmMultiplicities {
    int m1 = 0;
    int m2 = 0;
    /// Set exactly for the six (m, k) pairs with 0 < l - m - 1 < m, where the
    /// ordering of the pair flips and the codimension-(1 + m1) focal leaf is
    /// H^{-1}(1) rather than the Clifford-Stiefel quadric H^{-1}(0).
    bool exceptional = false;
    long long l = 0;
};

/// Ordered multiplicity pair (min, max) of (m, l - m - 1) with l = k delta(m).
/// Throws DomainError when l - m - 1 < 1 (no isoparametric family).
FkmMultiplicities fkm_multiplicities(int m, int k);

/// m+1 symmetric anticommuting involutions P_0..P_m on R^{2l}, l = k delta(m),
/// with entries in {-1, 0, +1}. One fixed irreducible representative per m,
/// extended to k > 1 by block-diagonal direct sum.
struct CliffordSystem {
    int m = 0;
    long long l = 0;
    std::vector<IntMatrix> p;
};

CliffordSystem clifford_system(int m, int k);

/// Exact check of P_i^2 = I and P_i P_j + P_j P_i = 0 for i != j.
bool verify_clifford(const CliffordSystem& sys);

/// The isoparametric polynomial H(x) = sum_i (x' P_i x)^2.
double fkm_polynomial(const CliffordSystem& sys, const std::vector<double>& x);

/// The individual quadratic forms x' P_i x; a unit x lies on the
/// Clifford-Stiefel variety iff all of them vanish.
std::vector<double> fkm_forms(const CliffordSystem& sys, const std::vector<double>& x);

enum class FamilyKind {
    HomogeneousReal,        // multiplicities (1, k-2), k >= 3
    HomogeneousComplex,     // (2, 2k-3), k >= 3
    HomogeneousQuaternionic,// (4, 4k-5), k >= 3
    E6Isolated,             // (6, 9)
    Fkm                     // (m, l-m-1) reordered, l = k delta(m)
};

enum class LeafKind { RegularMinimal, FocalMPlus };

struct ExampleFamily {
    FamilyKind kind;
    int k = 0;  // homogeneous and FKM families
    int m = 0;  // FKM only
    LeafKind leaf = LeafKind::RegularMinimal;
};

struct FamilyData {
    std::string tag;
    int m1 = 0;
    int m2 = 0;
    bool exceptional = false;
    long long l = 0;  // FKM only
};

FamilyData resolve_family(const ExampleFamily& family);

struct ConditionVerdict {
    bool certified = false;
    /// Which statement certifies ACS < 0 ("none" otherwise).
    std::string certifier;
    /// The exact inequality that was evaluated, with values substituted.
    std::string condition;
};

/// Evaluates the applicable closed-form hypothesis in exact rational
/// arithmetic: m1 >= 5 for regular minimal leaves, 4 m2 > 3 m1 + 10 for focal
/// leaves (reported in the Clifford-Stiefel form k > (7m+14)/(4 delta(m)) when
/// that inequality holds literally).
ConditionVerdict check_conditions(const ExampleFamily& family);

}  // namespace acs
