#pragma once

// Dense matrices over an exact coefficient domain. Row-major storage; all
// shapes including 0xN and Nx0 are valid.

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cech23/scalars.hpp"

namespace cech23 {

template <class T>
struct default_domain;
template <>
struct default_domain<Int> {
    static CoeffDomain value() { return CoeffDomain::integers(); }
};
template <>
struct default_domain<Rat> {
    static CoeffDomain value() { return CoeffDomain::rationals(); }
};

template <class T>
class Matrix {
  public:
    Matrix() : dom_(CoeffDomain::integers()) {}
    Matrix(std::size_t rows, std::size_t cols, CoeffDomain dom)
        : rows_(rows), cols_(cols), a_(rows * cols, scalar_from<T>(dom, 0)), dom_(dom) {}
    Matrix(std::size_t rows, std::size_t cols)
        requires(!std::is_same_v<T, Fp>)
        : Matrix(rows, cols, default_domain<T>::value()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CoeffDomain& domain() const { return dom_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static Matrix identity(std::size_t n, CoeffDomain dom) {
        Matrix m(n, n, dom);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_from<T>(dom, 1);
        return m;
    }
    static Matrix identity(std::size_t n)
        requires(!std::is_same_v<T, Fp>)
    {
        return identity(n, default_domain<T>::value());
    }

    bool is_zero() const {
        for (const T& x : a_)
            if (!cech23::is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        if (dom_ != o.dom_) throw std::invalid_argument("Matrix: domain mismatch in product");
        Matrix r(rows_, o.cols_, dom_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (cech23::is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
        std::vector<T> y(rows_, scalar_from<T>(dom_, 0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!cech23::is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || dom_ != o.dom_)
            throw std::invalid_argument("Matrix: shape mismatch in difference");
        Matrix r(rows_, cols_, dom_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
    CoeffDomain dom_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using FpMatrix = Matrix<Fp>;

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    if (a.domain() != b.domain()) throw std::invalid_argument("hcat: domain mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.domain());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

template <class T>
Matrix<T> column_matrix(const std::vector<T>& v, CoeffDomain dom) {
    Matrix<T> r(v.size(), 1, dom);
    for (std::size_t i = 0; i < v.size(); ++i) r(i, 0) = v[i];
    return r;
}

inline FpMatrix reduce_mod_p(const IntMatrix& m, std::uint64_t p) {
    FpMatrix r(m.rows(), m.cols(), CoeffDomain::prime_field(p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod_p(m(i, j), p);
    return r;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

}  // namespace cech23
