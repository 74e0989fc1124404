#pragma once

// Weight-graded truncations of the extended alternating complex on the three
// minor localizations. The term for a subset S of {1,2,3} at truncation level
// n is the slice of weight w + n*wt(f_S); it stands for the degree-w part of
// f_S^{-n} * R inside the localization R[f_S^{-1}]. Differential blocks are
// multiplication by f_i^n with alternating signs; transition maps (level n to
// n+1) multiply by f_S termwise.

#include <array>
#include <bit>
#include <cstdint>
#include <ostream>

#include "cech23/polynomial.hpp"

namespace cech23 {

// subsets as bitmasks (bit i-1 for generator i), listed by size then mask
inline constexpr std::array<unsigned, 8> subset_order = {0, 1, 2, 4, 3, 5, 6, 7};
inline constexpr std::array<std::array<unsigned, 3>, 4> subsets_by_size = {{
    {0, 0, 0},  // size 0: mask 0 (only first entry meaningful)
    {1, 2, 4},
    {3, 5, 6},
    {7, 0, 0},
}};
inline constexpr std::array<std::size_t, 4> subsets_count = {1, 3, 3, 1};

inline Weight subset_weight(unsigned mask) {
    Weight w;
    for (int i = 1; i <= 3; ++i)
        if (mask & (1u << (i - 1))) w = w + generator_weight(i);
    return w;
}

// (-1)^{number of j in S with j < i}
inline int insertion_sign(unsigned mask, int i) {
    int count = 0;
    for (int j = 1; j < i; ++j)
        if (mask & (1u << (j - 1))) ++count;
    return (count % 2) ? -1 : 1;
}

template <class T>
struct CechComplex {
    Weight w;
    unsigned level = 1;
    CoeffDomain dom;
    // bases per subset, indexed by position in subset_order
    std::array<std::vector<Monomial>, 8> bases;
    // d[j] : C_j -> C_{j+1}, blocks ordered like subsets_by_size
    std::array<Matrix<T>, 3> d;

    std::array<std::size_t, 4> dims() const {
        std::array<std::size_t, 4> out{};
        for (std::size_t pos = 0; pos < 8; ++pos) {
            unsigned mask = subset_order[pos];
            out[static_cast<std::size_t>(std::popcount(mask))] += bases[pos].size();
        }
        return out;
    }

    static std::size_t position_of(unsigned mask) {
        for (std::size_t pos = 0; pos < 8; ++pos)
            if (subset_order[pos] == mask) return pos;
        return 8;
    }

    Weight term_weight(unsigned mask) const {
        return w.scaled_add(subset_weight(mask), static_cast<std::int64_t>(level));
    }

    // offset of the subset's block inside its degree
    std::size_t block_offset(unsigned mask) const {
        int size = std::popcount(mask);
        std::size_t off = 0;
        for (std::size_t k = 0; k < subsets_count[static_cast<std::size_t>(size)]; ++k) {
            unsigned m = subsets_by_size[static_cast<std::size_t>(size)][k];
            if (m == mask) return off;
            off += bases[position_of(m)].size();
        }
        return off;
    }
};

template <class T>
CechComplex<T> build_complex(const Weight& w, unsigned level, CoeffDomain dom) {
    if (level < 1) throw std::invalid_argument("build_complex: level must be >= 1");
    CechComplex<T> c;
    c.w = w;
    c.level = level;
    c.dom = dom;
    for (std::size_t pos = 0; pos < 8; ++pos)
        c.bases[pos] = enumerate_basis(c.term_weight(subset_order[pos]));

    std::array<Polynomial<T>, 3> f = minor_generators<T>(dom);
    std::array<Polynomial<T>, 3> fn{f[0].pow(level), f[1].pow(level), f[2].pow(level)};

    for (int j = 0; j < 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        std::size_t rows = 0, cols = 0;
        for (std::size_t k = 0; k < subsets_count[ju + 1]; ++k)
            rows += c.bases[CechComplex<T>::position_of(subsets_by_size[ju + 1][k])].size();
        for (std::size_t k = 0; k < subsets_count[ju]; ++k)
            cols += c.bases[CechComplex<T>::position_of(subsets_by_size[ju][k])].size();
        Matrix<T> dj(rows, cols, dom);
        std::size_t coff = 0;
        for (std::size_t k = 0; k < subsets_count[ju]; ++k) {
            unsigned src = subsets_by_size[ju][k];
            std::size_t src_dim = c.bases[CechComplex<T>::position_of(src)].size();
            for (int i = 1; i <= 3; ++i) {
                unsigned bit = 1u << (i - 1);
                if (src & bit) continue;
                unsigned tgt = src | bit;
                Matrix<T> block =
                    multiplication_matrix(fn[static_cast<std::size_t>(i - 1)], c.term_weight(src));
                int sign = insertion_sign(src, i);
                std::size_t roff = 0;
                for (std::size_t k2 = 0; k2 < subsets_count[ju + 1]; ++k2) {
                    unsigned m = subsets_by_size[ju + 1][k2];
                    if (m == tgt) break;
                    roff += c.bases[CechComplex<T>::position_of(m)].size();
                }
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t cc = 0; cc < src_dim; ++cc)
                        dj(roff + r, coff + cc) =
                            sign > 0 ? block(r, cc) : -block(r, cc);
            }
            coff += src_dim;
        }
        c.d[ju] = std::move(dj);
    }
    return c;
}

// chain maps C_j(level n) -> C_j(level n+1): per subset, multiplication by f_S
template <class T>
std::array<Matrix<T>, 4> transition_maps(const Weight& w, unsigned level, CoeffDomain dom) {
    if (level < 1) throw std::invalid_argument("transition_maps: level must be >= 1");
    std::array<Polynomial<T>, 3> f = minor_generators<T>(dom);
    std::array<Matrix<T>, 4> out;
    for (int j = 0; j <= 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        std::vector<Matrix<T>> blocks;
        for (std::size_t k = 0; k < subsets_count[ju]; ++k) {
            unsigned mask = subsets_by_size[ju][k];
            Polynomial<T> fs = Polynomial<T>::one(dom);
            for (int i = 1; i <= 3; ++i)
                if (mask & (1u << (i - 1))) fs = fs * f[static_cast<std::size_t>(i - 1)];
            Weight src = w.scaled_add(subset_weight(mask), static_cast<std::int64_t>(level));
            blocks.push_back(multiplication_matrix(fs, src));
        }
        std::size_t rows = 0, cols = 0;
        for (const auto& b : blocks) {
            rows += b.rows();
            cols += b.cols();
        }
        Matrix<T> t(rows, cols, dom);
        std::size_t roff = 0, coff = 0;
        for (const auto& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t cc = 0; cc < b.cols(); ++cc) t(roff + r, coff + cc) = b(r, cc);
            roff += b.rows();
            coff += b.cols();
        }
        out[ju] = std::move(t);
    }
    return out;
}

// coordinates of (f1*f2*f3)^(n-1) in the top term of the level-n complex at
// the diagnostic weight -(3,3;2,2,2); this is the image of the level-1 class
// under the composed transitions
template <class T>
std::vector<T> canonical_class_vector(unsigned level, CoeffDomain dom) {
    if (level < 1) throw std::invalid_argument("canonical_class_vector: level must be >= 1");
    std::array<Polynomial<T>, 3> f = minor_generators<T>(dom);
    Polynomial<T> p = (f[0] * f[1] * f[2]).pow(level - 1);
    Weight w = product_weight().scaled_add(product_weight(), static_cast<std::int64_t>(level) - 2);
    // w = (level-1) * (3,3;2,2,2)
    std::vector<Monomial> basis = enumerate_basis(w);
    std::vector<T> v(basis.size(), scalar_from<T>(dom, 0));
    for (const auto& [m, c] : p.terms()) v[basis_index(basis, m)] = c;
    return v;
}

template <class T>
bool verify_chain(const CechComplex<T>& c) {
    return (c.d[1] * c.d[0]).is_zero() && (c.d[2] * c.d[1]).is_zero();
}

// d(level n+1) . t = t . d(level n) in every degree
template <class T>
bool verify_transition(const Weight& w, unsigned level, CoeffDomain dom) {
    CechComplex<T> lo = build_complex<T>(w, level, dom);
    CechComplex<T> hi = build_complex<T>(w, level + 1, dom);
    std::array<Matrix<T>, 4> t = transition_maps<T>(w, level, dom);
    for (int j = 0; j < 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (!(hi.d[ju] * t[ju] - t[ju + 1] * lo.d[ju]).is_zero()) return false;
    }
    return true;
}

// triple dump: header "rows cols weight level degree", then one
// "row col value" line per nonzero entry (0-indexed)
template <class T>
void dump_differential(std::ostream& os, const CechComplex<T>& c, int degree) {
    if (degree < 0 || degree > 2) throw std::invalid_argument("dump_differential: degree 0..2");
    const Matrix<T>& m = c.d[static_cast<std::size_t>(degree)];
    os << m.rows() << ' ' << m.cols() << ' ' << c.w.str() << ' ' << c.level << ' ' << degree
       << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) os << i << ' ' << j << ' ' << scalar_str(m(i, j)) << '\n';
}

}  // namespace cech23
