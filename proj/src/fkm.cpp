#include "acs/fkm.hpp"

#include <array>
#include <utility>

namespace acs {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.n != y.n) throw InvalidArgument("IntMatrix: size mismatch in product");
    IntMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const std::int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.n != y.n) throw InvalidArgument("IntMatrix: size mismatch in sum");
    IntMatrix r(x.n);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

IntMatrix IntMatrix::tensor(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n * y.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            const std::int64_t v = x.at(i, j);
            if (v == 0) continue;
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l)
                    r.at(i * y.n + k, j * y.n + l) = v * y.at(k, l);
        }
    return r;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& block, int copies) {
    IntMatrix r(block.n * copies);
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < block.n; ++i)
            for (int j = 0; j < block.n; ++j)
                r.at(c * block.n + i, c * block.n + j) = block.at(i, j);
    return r;
}

long long delta(int m) {
    if (m < 1) throw InvalidArgument("delta requires m >= 1");
    if (m > 120) throw InvalidArgument("delta: m too large for 64-bit arithmetic");
    static const std::array<long long, 8> base{1, 2, 4, 4, 8, 8, 8, 8};
    long long factor = 1;
    while (m > 8) {
        factor *= 16;
        m -= 8;
    }
    return factor * base[m - 1];
}

FkmMultiplicities fkm_multiplicities(int m, int k) {
    if (m < 1 || k < 1) throw InvalidArgument("fkm_multiplicities requires m >= 1 and k >= 1");
    FkmMultiplicities out;
    out.l = static_cast<long long>(k) * delta(m);
    const long long other = out.l - m - 1;
    if (other < 1)
        throw DomainError("fkm_multiplicities: l - m - 1 = " + std::to_string(other) +
                          " < 1, no isoparametric family");
    if (other > 1000000000LL) throw InvalidArgument("fkm_multiplicities: parameters too large");
    out.m1 = static_cast<int>(std::min<long long>(m, other));
    out.m2 = static_cast<int>(std::max<long long>(m, other));
    out.exceptional = other < m;
    return out;
}

namespace {

// Signed basis-product tables for the composition algebras, built by
// Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct SignedUnit {
    int sign;
    int index;
};

// Hamilton table for units 1, i, j, k.
SignedUnit quat_mul(int a, int b) {
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {sgn[a][b], idx[a][b]};
}

SignedUnit quat_conj(SignedUnit u) {
    return {u.index == 0 ? u.sign : -u.sign, u.index};
}

// Octonion units e_0..e_7 as pairs (q, 0) / (0, q) of quaternion units.
SignedUnit oct_mul(int a, int b) {
    const bool ahi = a >= 4, bhi = b >= 4;
    const int qa = a & 3, qb = b & 3;
    if (!ahi && !bhi) return quat_mul(qa, qb);
    if (!ahi && bhi) {  // (qa, 0)(0, qb) = (0, qb qa)
        SignedUnit r = quat_mul(qb, qa);
        return {r.sign, r.index + 4};
    }
    if (ahi && !bhi) {  // (0, qa)(qb, 0) = (0, qa conj(qb))
        SignedUnit cb = quat_conj({1, qb});
        SignedUnit r = quat_mul(qa, cb.index);
        return {r.sign * cb.sign, r.index + 4};
    }
    // (0, qa)(0, qb) = (-conj(qb) qa, 0)
    SignedUnit cb = quat_conj({1, qb});
    SignedUnit r = quat_mul(cb.index, qa);
    return {-r.sign * cb.sign, r.index};
}

// Left-multiplication matrix of a basis unit in a composition algebra of
// dimension dim (4 or 8); for imaginary units these are skew-symmetric signed
// permutation matrices squaring to -I.
IntMatrix left_mult_matrix(int unit, int dim) {
    IntMatrix m(dim);
    for (int u = 0; u < dim; ++u) {
        const SignedUnit r = dim == 4 ? quat_mul(unit, u) : oct_mul(unit, u);
        m.at(r.index, u) = r.sign;
    }
    return m;
}

// q pairwise-anticommuting skew-symmetric complex structures on R^{dim}, the
// ingredient for a Clifford system with m = q + 1 involutions. Dimensions
// follow delta: 1, 2, 4, 4, 8, 8, 8, 8, then x16 per eight generators.
std::vector<IntMatrix> skew_generators(int q, int& dim) {
    if (q == 0) {
        dim = 1;
        return {};
    }
    if (q == 1) {
        dim = 2;
        IntMatrix j(2);
        j.at(0, 1) = -1;
        j.at(1, 0) = 1;
        return {j};
    }
    if (q <= 3) {
        dim = 4;
        std::vector<IntMatrix> gens;
        for (int u = 1; u <= q; ++u) gens.push_back(left_mult_matrix(u, 4));
        return gens;
    }
    if (q <= 7) {
        dim = 8;
        std::vector<IntMatrix> gens;
        for (int u = 1; u <= q; ++u) gens.push_back(left_mult_matrix(u, 8));
        return gens;
    }

    // Bott step: eight generators on R^16, remaining q - 8 tensored with the
    // (symmetric, square +I) product of all eight.
    int sub_dim = 0;
    std::vector<IntMatrix> sub = skew_generators(q - 8, sub_dim);

    std::vector<IntMatrix> eight;
    for (int u = 1; u <= 7; ++u) {
        const IntMatrix lo = left_mult_matrix(u, 8);
        IntMatrix e(16);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                e.at(i, 8 + j) = lo.at(i, j);
                e.at(8 + i, j) = lo.at(i, j);
            }
        eight.push_back(e);
    }
    IntMatrix swap(16);
    for (int i = 0; i < 8; ++i) {
        swap.at(i, 8 + i) = -1;
        swap.at(8 + i, i) = 1;
    }
    eight.push_back(swap);

    IntMatrix omega = IntMatrix::identity(16);
    for (const auto& e : eight) omega = omega * e;

    dim = 16 * sub_dim;
    std::vector<IntMatrix> gens;
    const IntMatrix id_sub = IntMatrix::identity(sub_dim);
    for (const auto& e : eight) gens.push_back(IntMatrix::tensor(e, id_sub));
    for (const auto& f : sub) gens.push_back(IntMatrix::tensor(omega, f));
    return gens;
}

}  // namespace

CliffordSystem clifford_system(int m, int k) {
    if (m < 1 || k < 1) throw InvalidArgument("clifford_system requires m >= 1 and k >= 1");
    const long long l = static_cast<long long>(k) * delta(m);
    if (2 * l > 1024)
        throw InvalidArgument("clifford_system: 2l = " + std::to_string(2 * l) +
                              " exceeds the supported size (1024)");

    int dim = 0;
    const std::vector<IntMatrix> gens = skew_generators(m - 1, dim);
    const int li = static_cast<int>(delta(m));
    if (dim != li)
        throw NumericalError("clifford_system: generator dimension disagrees with delta(m)");

    std::vector<IntMatrix> p;
    IntMatrix p0(2 * li), p1(2 * li);
    for (int i = 0; i < li; ++i) {
        p0.at(i, i) = 1;
        p0.at(li + i, li + i) = -1;
        p1.at(i, li + i) = 1;
        p1.at(li + i, i) = 1;
    }
    p.push_back(p0);
    p.push_back(p1);
    for (const auto& e : gens) {
        IntMatrix pi(2 * li);
        for (int i = 0; i < li; ++i)
            for (int j = 0; j < li; ++j) {
                pi.at(i, li + j) = e.at(i, j);
                pi.at(li + i, j) = -e.at(i, j);
            }
        p.push_back(pi);
    }

    CliffordSystem sys;
    sys.m = m;
    sys.l = l;
    for (auto& mat : p) sys.p.push_back(k == 1 ? std::move(mat) : IntMatrix::direct_sum(mat, k));
    return sys;
}

bool verify_clifford(const CliffordSystem& sys) {
    const int n = static_cast<int>(2 * sys.l);
    const IntMatrix id = IntMatrix::identity(n);
    const IntMatrix zero(n);
    for (std::size_t i = 0; i < sys.p.size(); ++i) {
        if (sys.p[i].n != n || !sys.p[i].is_symmetric()) return false;
        if (!(sys.p[i] * sys.p[i] == id)) return false;
        for (std::size_t j = i + 1; j < sys.p.size(); ++j)
            if (!(sys.p[i] * sys.p[j] + sys.p[j] * sys.p[i] == zero)) return false;
    }
    return true;
}

std::vector<double> fkm_forms(const CliffordSystem& sys, const std::vector<double>& x) {
    const int n = static_cast<int>(2 * sys.l);
    if (static_cast<int>(x.size()) != n)
        throw InvalidArgument("fkm_forms: vector dimension mismatch");
    std::vector<double> forms;
    forms.reserve(sys.p.size());
    for (const auto& pi : sys.p) {
        double q = 0.0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                const std::int64_t v = pi.at(i, j);
                if (v != 0) q += x[i] * static_cast<double>(v) * x[j];
            }
        }
        forms.push_back(q);
    }
    return forms;
}

double fkm_polynomial(const CliffordSystem& sys, const std::vector<double>& x) {
    double h = 0.0;
    for (double q : fkm_forms(sys, x)) h += q * q;
    return h;
}

FamilyData resolve_family(const ExampleFamily& family) {
    FamilyData data;
    switch (family.kind) {
        case FamilyKind::HomogeneousReal:
            if (family.k < 3) throw InvalidArgument("homogeneous families require k >= 3");
            data.tag = "homogeneous-real";
            data.m1 = 1;
            data.m2 = family.k - 2;
            break;
        case FamilyKind::HomogeneousComplex:
            if (family.k < 3) throw InvalidArgument("homogeneous families require k >= 3");
            data.tag = "homogeneous-complex";
            data.m1 = 2;
            data.m2 = 2 * family.k - 3;
            break;
        case FamilyKind::HomogeneousQuaternionic:
            if (family.k < 3) throw InvalidArgument("homogeneous families require k >= 3");
            data.tag = "homogeneous-quaternionic";
            data.m1 = 4;
            data.m2 = 4 * family.k - 5;
            break;
        case FamilyKind::E6Isolated:
            data.tag = "e6-isolated";
            data.m1 = 6;
            data.m2 = 9;
            break;
        case FamilyKind::Fkm: {
            const FkmMultiplicities fm = fkm_multiplicities(family.m, family.k);
            data.tag = "fkm";
            data.m1 = fm.m1;
            data.m2 = fm.m2;
            data.exceptional = fm.exceptional;
            data.l = fm.l;
            break;
        }
    }
    return data;
}

ConditionVerdict check_conditions(const ExampleFamily& family) {
    const FamilyData data = resolve_family(family);
    ConditionVerdict verdict;
    if (family.leaf == LeafKind::RegularMinimal) {
        verdict.certified = data.m1 >= 5;
        verdict.condition = "m1 = " + std::to_string(data.m1) + (data.m1 >= 5 ? " >= 5" : " < 5");
        verdict.certifier = verdict.certified ? "minimal-leaf bound: m1 >= 5" : "none";
        return verdict;
    }

    // Focal leaf: exact integer inequality 4 m2 > 3 m1 + 10.
    const long long lhs = 4LL * data.m2;
    const long long rhs = 3LL * data.m1 + 10;
    verdict.certified = lhs > rhs;
    verdict.condition = "4*m2 = " + std::to_string(lhs) + (lhs > rhs ? " > " : " <= ") +
                        std::to_string(rhs) + " = 3*m1 + 10";
    if (!verdict.certified) {
        verdict.certifier = "none";
        return verdict;
    }
    verdict.certifier = "focal bound: 4*m2 > 3*m1 + 10";
    if (family.kind == FamilyKind::Fkm) {
        // Report the Clifford-Stiefel form when the literal k-threshold holds.
        const Rational threshold(BigInt(7LL * family.m + 14), BigInt(4) * BigInt(delta(family.m)));
        if (Rational(family.k) > threshold)
            verdict.certifier = "clifford-stiefel bound: k > (7m+14)/(4 delta(m))";
    }
    return verdict;
}

}  // namespace acs
