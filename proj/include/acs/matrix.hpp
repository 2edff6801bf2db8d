#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "acs/error.hpp"
#include "acs/quaternion.hpp"

namespace acs {

enum class ScalarField { Real, Complex, Quaternionic };

template <class F>
struct field_traits;

template <>
struct field_traits<double> {
    static constexpr ScalarField tag = ScalarField::Real;
    static constexpr double conj(double v) { return v; }
    static constexpr double real(double v) { return v; }
    static constexpr double abs_sq(double v) { return v * v; }
};

template <>
struct field_traits<std::complex<double>> {
    static constexpr ScalarField tag = ScalarField::Complex;
    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
    static double real(const std::complex<double>& v) { return v.real(); }
    static double abs_sq(const std::complex<double>& v) { return std::norm(v); }
};

template <>
struct field_traits<Quaternion> {
    static constexpr ScalarField tag = ScalarField::Quaternionic;
    static constexpr Quaternion conj(const Quaternion& v) { return v.conj(); }
    static constexpr double real(const Quaternion& v) { return v.w; }
    static constexpr double abs_sq(const Quaternion& v) { return v.norm_sq(); }
};

/// Dense row-major matrix over F in {double, complex<double>, Quaternion}.
/// Sized for the small matrices of this problem domain; all products are
/// naive triple loops.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(check_size(rows, cols)) {}
    Matrix(int rows, int cols, std::initializer_list<F> init) : Matrix(rows, cols) {
        if (static_cast<int>(init.size()) != rows * cols)
            throw InvalidArgument("matrix initializer size mismatch");
        std::copy(init.begin(), init.end(), a_.begin());
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1.0);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix& operator+=(const Matrix& r) {
        require_same_shape(r, "+=");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += r.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& r) {
        require_same_shape(r, "-=");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= r.a_[i];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (auto& v : a_) v = v * s;
        return *this;
    }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = field_traits<F>::conj((*this)(i, j));
        return m;
    }

    void require_same_shape(const Matrix& r, const char* op) const {
        if (rows_ != r.rows_ || cols_ != r.cols_)
            throw InvalidArgument(std::string("matrix shape mismatch in ") + op);
    }

private:
    static std::size_t check_size(int rows, int cols) {
        if (rows <= 0 || cols <= 0) throw InvalidArgument("matrix dimensions must be positive");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

template <class F>
Matrix<F> operator+(Matrix<F> a, const Matrix<F>& b) { return a += b; }
template <class F>
Matrix<F> operator-(Matrix<F> a, const Matrix<F>& b) { return a -= b; }
template <class F>
Matrix<F> operator*(Matrix<F> a, double s) { return a *= s; }
template <class F>
Matrix<F> operator*(double s, Matrix<F> a) { return a *= s; }

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch in product");
    Matrix<F> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const F& aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Left scalar multiplication by a field element (entrywise q * a_ij).
template <class F>
Matrix<F> scalar_mul(const F& q, const Matrix<F>& a) {
    Matrix<F> c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = q * a(i, j);
    return c;
}

/// Real part of the trace of a square matrix. Over the quaternions this is
/// the cyclic trace functional used throughout.
template <class F>
double re_trace(const Matrix<F>& m) {
    if (!m.square()) throw InvalidArgument("re_trace requires a square matrix");
    double t = 0.0;
    for (int i = 0; i < m.rows(); ++i) t += field_traits<F>::real(m(i, i));
    return t;
}

/// Full trace (meaningful over the quaternions where Im tr need not vanish).
template <class F>
F trace(const Matrix<F>& m) {
    if (!m.square()) throw InvalidArgument("trace requires a square matrix");
    F t{};
    for (int i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Re tr(A B*) without forming the product.
template <class F>
double re_frobenius_inner(const Matrix<F>& a, const Matrix<F>& b) {
    a.require_same_shape(b, "re_frobenius_inner");
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            s += field_traits<F>::real(a(i, j) * field_traits<F>::conj(b(i, j)));
    return s;
}

template <class F>
double frobenius_norm_sq(const Matrix<F>& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += field_traits<F>::abs_sq(a(i, j));
    return s;
}

using MatrixR = Matrix<double>;
using MatrixC = Matrix<std::complex<double>>;
using MatrixH = Matrix<Quaternion>;

/// Bi-invariant metric <X,Y> = c_n Re tr(X Y*) on n x n matrices, with
/// c_n = 2n over the complex field and 4(n+1) over the quaternions (the
/// negative Cartan-Killing form on the corresponding unitary Lie algebra).
struct KillingMetric {
    ScalarField field;
    int n;
    double c_n;

    static KillingMetric su(int n) {
        if (n < 2) throw InvalidArgument("KillingMetric::su requires n >= 2");
        return {ScalarField::Complex, n, 2.0 * n};
    }
    static KillingMetric sp(int n) {
        if (n < 1) throw InvalidArgument("KillingMetric::sp requires n >= 1");
        return {ScalarField::Quaternionic, n, 4.0 * (n + 1)};
    }
};

template <class F>
double killing_inner(const Matrix<F>& x, const Matrix<F>& y, const KillingMetric& metric) {
    if (field_traits<F>::tag != metric.field)
        throw InvalidArgument("killing_inner: scalar field does not match the metric");
    if (!x.square() || x.rows() != metric.n)
        throw InvalidArgument("killing_inner: matrix size does not match the metric");
    x.require_same_shape(y, "killing_inner");
    return metric.c_n * re_frobenius_inner(x, y);
}

}  // namespace acs
