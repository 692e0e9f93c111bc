#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "acphase/error.hpp"
#include "acphase/exact_scalar.hpp"

namespace acphase {

using Complex = std::complex<double>;

template <class T>
inline constexpr bool is_numeric_scalar_v = std::is_same_v<T, Complex>;

/// Dense row-major matrix. Instantiated for ExactScalar (identity proofs) and
/// std::complex<double> (residuals, quadrature-side work). Dimensions in this
/// project never exceed 16, so there is no blocking or sparsity.
template <class T>
class DenseMatrix {
public:
    using value_type = T;

    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionError("DenseMatrix: entry count != rows*cols");
        check_finite();
    }
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("DenseMatrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
        check_finite();
    }

    static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }
    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const T> entries() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }
    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& v : data_)
            if (!(v == T(0))) ++n;
        return n;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
    DenseMatrix adjoint() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                using std::conj;
                t(c, r) = conj((*this)(r, c));
            }
        return t;
    }

    /// Copy `block` into this matrix with its top-left corner at (row, col).
    void set_block(std::size_t row, std::size_t col, const DenseMatrix& block) {
        if (row + block.rows_ > rows_ || col + block.cols_ > cols_)
            throw DimensionError("set_block: block does not fit");
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row + r, col + c) = block(r, c);
    }
    DenseMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
        if (row + rows > rows_ || col + cols > cols_) throw DimensionError("block: out of range");
        DenseMatrix b(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(row + r, col + c);
        return b;
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    DenseMatrix& operator-=(const DenseMatrix& o) {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    DenseMatrix& operator*=(const T& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, const T& s) { return a *= s; }
    friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }
    DenseMatrix operator-() const {
        DenseMatrix r(*this);
        for (auto& v : r.data_) v = -v;
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const DenseMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("matrix ") + op + ": shape mismatch");
    }
    void check_finite() const {
        if constexpr (is_numeric_scalar_v<T>) {
            for (const auto& v : data_)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw PreconditionError("NumericMatrix: non-finite entry");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<ExactScalar>;
using NumericMatrix = DenseMatrix<Complex>;
using ExactVector = std::vector<ExactScalar>;
using NumericVector = std::vector<Complex>;

template <class T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: a.cols != b.rows");
    DenseMatrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T(0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) == T(0)) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    return out;
}

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    return mat_mul(a, b);
}

template <class T>
std::vector<T> mat_vec(const DenseMatrix<T>& a, std::span<const T> v) {
    if (a.cols() != v.size()) throw DimensionError("apply: a.cols != v.size");
    std::vector<T> out(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!(a(i, k) == T(0)) && !(v[k] == T(0))) out[i] += a(i, k) * v[k];
    return out;
}

template <class T>
std::vector<T> mat_vec(const DenseMatrix<T>& a, const std::vector<T>& v) {
    return mat_vec(a, std::span<const T>(v));
}

namespace detail {
template <class T>
void require_square_pair(const DenseMatrix<T>& a, const DenseMatrix<T>& b, const char* what) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw DimensionError(std::string(what) + ": operands must be square with equal dimension");
}
}  // namespace detail

/// ab - ba
template <class T>
DenseMatrix<T> commutator(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    detail::require_square_pair(a, b, "commutator");
    return a * b - b * a;
}

/// ab + ba
template <class T>
DenseMatrix<T> anticommutator(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    detail::require_square_pair(a, b, "anticommutator");
    return a * b + b * a;
}

/// Partial sum of e^{-iX} G e^{iX} = sum_k (-i)^k/k! ad_X^k(G), k = 0..order.
ExactMatrix bch_conjugate(const ExactMatrix& x, const ExactMatrix& g, unsigned order);

NumericMatrix to_numeric(const ExactMatrix& m);
NumericVector to_numeric(const ExactVector& v);

/// Coefficients c[0..n] of det(lambda*I - A) = sum_k c[k] lambda^k (monic),
/// by Faddeev-LeVerrier over the exact field.
std::vector<ExactScalar> characteristic_polynomial(const ExactMatrix& a);

/// Multiplicity of `root` in the polynomial with coefficients `poly`
/// (lowest degree first), by repeated exact synthetic division.
std::size_t root_multiplicity(std::vector<ExactScalar> poly, const ExactScalar& root);

double max_abs(const NumericMatrix& m);
double max_abs(std::span<const Complex> v);

std::string to_string(const ExactMatrix& m);

}  // namespace acphase
