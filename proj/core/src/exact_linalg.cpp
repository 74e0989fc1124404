#include "cech23/exact_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace cech23 {

namespace {

// Bareiss fraction-free elimination. Destroys a. Returns rank; if det_out is
// given, a must be square and *det_out receives the determinant.
std::size_t bareiss(IntMatrix& a, Int* det_out) {
    const std::size_t m = a.rows(), n = a.cols();
    Int prev(1);
    int swap_sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // smallest nonzero pivot in column keeps the entries tame
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i) {
            if (is_zero(a(i, c))) continue;
            if (piv == m || cmp(abs(a(i, c)), abs(a(piv, c))) < 0) piv = i;
        }
        if (piv == m) {
            if (det_out) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) swap(a(r, j), a(piv, j));
            swap_sign = -swap_sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Int t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    if (det_out) {
        if (r < m)
            *det_out = 0;
        else
            *det_out = swap_sign > 0 ? prev : Int(-prev);
    }
    return r;
}

}  // namespace

std::size_t rank_bareiss(const IntMatrix& m) {
    IntMatrix a = m;
    return bareiss(a, nullptr);
}

Int det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    if (m.rows() == 0) return Int(1);
    IntMatrix a = m;
    Int d;
    bareiss(a, &d);
    return d;
}

std::size_t rank_over_field(const RatMatrix& m) {
    // clear denominators row by row; row scaling preserves rank
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int lcm(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat x = m(i, j) * Rat(lcm);
            assert(x.get_den() == 1);
            a(i, j) = x.get_num();
        }
    }
    return bareiss(a, nullptr);
}

std::size_t rank_over_field(const FpMatrix& m) {
    FpMatrix a = m;
    return rref_in_place(a);
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithNormalForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& a = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols; ++j) swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < rows; ++j) swap(u(i, j), u(k, j));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows; ++i) swap(a(i, j), a(i, k));
        for (std::size_t i = 0; i < cols; ++i) swap(v(i, j), v(i, k));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        // row_dst -= q * row_src
        if (is_zero(q)) return;
        for (std::size_t j = 0; j < cols; ++j) a(dst, j) -= q * a(src, j);
        for (std::size_t j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (is_zero(q)) return;
        for (std::size_t i = 0; i < rows; ++i) a(i, dst) -= q * a(i, src);
        for (std::size_t i = 0; i < cols; ++i) v(i, dst) -= q * v(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = -a(i, j);
        for (std::size_t j = 0; j < rows; ++j) u(i, j) = -u(i, j);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (is_zero(a(i, j))) continue;
                    if (pi == rows || cmp(abs(a(i, j)), abs(a(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) {
                t = steps;  // trailing block is zero, done
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            // reduce column and row by the pivot (quotients round toward zero,
            // remainders shrink strictly, so this terminates)
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (is_zero(a(i, t))) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                add_row(i, t, q);
                if (!is_zero(a(i, t))) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (is_zero(a(t, j))) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                add_col(j, t, q);
                if (!is_zero(a(t, j))) clean = false;
            }
            if (!clean) continue;
            // pivot is lone; enforce divisibility of the remaining block
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows) {
                if (sgn(a(t, t)) < 0) negate_row(t);
                break;
            }
            add_row(t, bad, Int(-1));  // fold the offending row in and redo
        }
        if (t == steps) break;
    }
    return s;
}

std::optional<Int> divisibility_index(const IntMatrix& m, const std::vector<Int>& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("divisibility_index: dimension mismatch");
    SmithNormalForm s = smith_normal_form(m);
    std::vector<Int> y = s.u.apply(v);
    std::size_t r = s.rank();
    for (std::size_t i = r; i < y.size(); ++i)
        if (!is_zero(y[i])) return std::nullopt;
    Int k(1);
    for (std::size_t i = 0; i < r; ++i) {
        if (is_zero(y[i])) continue;
        Int g, need;
        mpz_gcd(g.get_mpz_t(), s.d(i, i).get_mpz_t(), y[i].get_mpz_t());
        mpz_divexact(need.get_mpz_t(), s.d(i, i).get_mpz_t(), g.get_mpz_t());
        mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), need.get_mpz_t());
    }
    return k;
}

IntegerCohomology integer_cohomology(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("integer_cohomology: chain dimension mismatch");
    if (d_in.cols() > 0 && d_out.rows() > 0 && !(d_out * d_in).is_zero())
        throw std::invalid_argument("integer_cohomology: maps do not compose to zero");
    IntegerCohomology h;
    std::size_t b = d_in.rows();
    SmithNormalForm s = smith_normal_form(d_in);
    std::size_t rank_in = s.rank();
    std::size_t rank_out = rank_bareiss(d_out);
    h.free_rank = b - rank_in - rank_out;
    for (const Int& f : s.invariant_factors())
        if (cmp(f, 1) > 0) h.torsion.push_back(f);
    return h;
}

}  // namespace cech23
