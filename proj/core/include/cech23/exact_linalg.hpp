#pragma once

// Exact linear algebra: field elimination (Q, F_p), fraction-free integer
// elimination for ranks and determinants, Smith normal form with recorded
// unimodular transforms, and the integer cohomology / divisibility helpers
// built on top of it.

#include <optional>
#include <vector>

#include "cech23/matrix.hpp"

namespace cech23 {

// --- field routines (F is Rat or Fp) ---

// plain Gauss-Jordan; returns rank, A becomes reduced row echelon in place,
// pivot columns reported when requested
template <class F>
std::size_t rref_in_place(Matrix<F>& a, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && is_zero(a(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        F inv = field_inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            F f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

// rank over Z viewed in Q: fraction-free (Bareiss) elimination, integer
// arithmetic only
std::size_t rank_bareiss(const IntMatrix& m);

// exact determinant of a square integer matrix, fraction-free
Int det_bareiss(const IntMatrix& m);

// rational matrices are scaled row-wise to integers first so the elimination
// core never touches rational arithmetic
std::size_t rank_over_field(const RatMatrix& m);
std::size_t rank_over_field(const FpMatrix& m);

// one solution of a*x = rhs, or nullopt when inconsistent
template <class F>
std::optional<std::vector<F>> solve_over_field(const Matrix<F>& a, const std::vector<F>& rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.cols() == 0) {
        for (const F& x : rhs)
            if (!is_zero(x)) return std::nullopt;
        return std::vector<F>{};
    }
    Matrix<F> aug = hcat(a, column_matrix(rhs, a.domain()));
    std::vector<std::size_t> pivots;
    rref_in_place(aug, &pivots);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // pivot in rhs column
    std::vector<F> x(a.cols(), scalar_from<F>(a.domain(), 0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
    return x;
}

// columns form a basis of the null space
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    Matrix<F> r = a;
    std::vector<std::size_t> pivots;
    std::size_t rank = rref_in_place(r, &pivots);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix<F> k(a.cols(), a.cols() - rank, a.domain());
    std::size_t out = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        k(c, out) = scalar_from<F>(a.domain(), 1);
        for (std::size_t t = 0; t < pivots.size(); ++t) k(pivots[t], out) = -r(t, c);
        ++out;
    }
    return k;
}

// --- integer structure ---

// u * input * v = d with u, v unimodular and diagonal d, each diagonal entry
// dividing the next
struct SmithNormalForm {
    IntMatrix u, d, v;
    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(d(i, i))) break;
            f.push_back(d(i, i));
        }
        return f;
    }
    std::size_t rank() const { return invariant_factors().size(); }
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// smallest k >= 1 with k*v in the integer column span of m; nullopt when v is
// not even in the rational span
std::optional<Int> divisibility_index(const IntMatrix& m, const std::vector<Int>& v);

// middle cohomology of  . --d_in--> Z^b --d_out--> .
struct IntegerCohomology {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1 of the incoming map
    bool operator==(const IntegerCohomology&) const = default;
};

IntegerCohomology integer_cohomology(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace cech23
