#pragma once

// Cohomology of the truncated complexes, membership of the distinguished
// class in the image of the last differential, death-level search over prime
// fields, direct-limit rank estimation, and the mod-p consistency check
// against the integer structure.

#include "cech23/cech_complex.hpp"
#include "cech23/exact_linalg.hpp"

namespace cech23 {

inline Weight diagnostic_weight() { return -product_weight(); }  // (-3,-3;-2,-2,-2)

struct FieldCohomology {
    Weight w;
    unsigned level = 1;
    CoeffDomain dom;
    std::array<std::size_t, 4> term_dims{};
    std::array<std::size_t, 4> h{};
};

template <class F>
FieldCohomology cohomology_over_field(const Weight& w, unsigned level, CoeffDomain dom) {
    CechComplex<F> c = build_complex<F>(w, level, dom);
    FieldCohomology out{w, level, dom, c.dims(), {}};
    std::array<std::size_t, 3> rk{};
    for (int j = 0; j < 3; ++j) rk[static_cast<std::size_t>(j)] = rank_over_field(c.d[static_cast<std::size_t>(j)]);
    for (int j = 0; j <= 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        std::size_t cut = (j < 3 ? rk[ju] : 0) + (j > 0 ? rk[ju - 1] : 0);
        out.h[ju] = out.term_dims[ju] - cut;
    }
    return out;
}

struct IntCohomology {
    Weight w;
    unsigned level = 1;
    std::array<std::size_t, 4> term_dims{};
    std::array<IntegerCohomology, 4> h;
};

IntCohomology cohomology_over_integers(const Weight& w, unsigned level);

// is the class of (f1 f2 f3)^(-n), i.e. (f1 f2 f3)^(n-1) over the top
// denominator, a combination of classes with smaller support?
template <class F>
bool class_in_image(unsigned level, CoeffDomain dom) {
    CechComplex<F> c = build_complex<F>(diagnostic_weight(), level, dom);
    std::vector<F> v = canonical_class_vector<F>(level, dom);
    return solve_over_field(c.d[2], v).has_value();
}

struct DeathReport {
    std::uint64_t p = 0;
    unsigned probed_lo = 1, probed_hi = 0;
    std::vector<bool> in_image;           // per level probed_lo..probed_hi
    std::optional<unsigned> death_level;  // first level with membership
};

DeathReport death_level(std::uint64_t p, unsigned n_max);

struct ColimitTable {
    Weight w;
    int degree = 0;
    unsigned n_lo = 1, n_hi = 1;
    CoeffDomain dom;
    // ranks[k] = rank of H^degree(level n_lo) -> H^degree(level n_lo + k)
    std::vector<std::size_t> ranks;
    bool stabilized = false;       // last three entries agree
    std::size_t stable_value = 0;  // meaningful when stabilized
};

template <class F>
ColimitTable colimit_rank(const Weight& w, int degree, unsigned n_lo, unsigned n_hi,
                          CoeffDomain dom) {
    if (degree < 0 || degree > 3) throw std::invalid_argument("colimit_rank: degree 0..3");
    if (n_lo < 1 || n_lo >= n_hi) throw std::invalid_argument("colimit_rank: need 1 <= n_lo < n_hi");
    const auto ju = static_cast<std::size_t>(degree);
    ColimitTable out{w, degree, n_lo, n_hi, dom, {}, false, 0};

    CechComplex<F> base = build_complex<F>(w, n_lo, dom);
    // columns spanning ker(d_degree) at the base level; in top degree the
    // whole term survives
    Matrix<F> kern = degree < 3 ? kernel_basis(base.d[ju])
                                : Matrix<F>::identity(base.dims()[3], dom);
    Matrix<F> mapped = kern;  // composed transitions applied to the kernel basis

    for (unsigned m = n_lo; m <= n_hi; ++m) {
        if (m > n_lo) {
            std::array<Matrix<F>, 4> t = transition_maps<F>(w, m - 1, dom);
            mapped = t[ju] * mapped;
        }
        std::size_t rank_img;
        if (degree > 0) {
            CechComplex<F> cm = build_complex<F>(w, m, dom);
            const Matrix<F>& din = cm.d[ju - 1];
            rank_img = rank_over_field(hcat(mapped, din)) - rank_over_field(din);
        } else {
            rank_img = rank_over_field(mapped);
        }
        out.ranks.push_back(rank_img);
    }
    std::size_t n = out.ranks.size();
    if (n >= 3 && out.ranks[n - 1] == out.ranks[n - 2] && out.ranks[n - 2] == out.ranks[n - 3]) {
        out.stabilized = true;
        out.stable_value = out.ranks[n - 1];
    }
    return out;
}

struct UctRow {
    int degree = 0;
    std::size_t mod_p_dim = 0;   // dim_{F_p} H^j of the reduced complex
    std::size_t free_rank = 0;   // rank of H^j over Z
    std::size_t tors_here = 0;   // p-torsion factors of H^j
    std::size_t tors_above = 0;  // p-torsion factors of H^{j+1}
    bool ok = false;             // mod_p_dim == free_rank + tors_here + tors_above
};

struct UctReport {
    Weight w;
    unsigned level = 1;
    std::uint64_t p = 0;
    std::array<UctRow, 4> rows;
    bool ok = false;
};

// checks dim H^j(C (x) F_p) = rank H^j(C) + #p-torsion(H^j) + #p-torsion(H^{j+1})
// degree by degree, on the truncated complex at (w, level)
UctReport universal_coefficients_check(const Weight& w, unsigned level, std::uint64_t p);

// same identity evaluated on an arbitrary 4-term integer complex given by its
// three differentials (used for randomized cross-checks)
UctReport universal_coefficients_check(const std::array<IntMatrix, 3>& d, std::uint64_t p);

// weight-space dimension of the top local cohomology supported at the origin:
// counts exponent matrices with every entry >= 1 of weight -w
std::size_t h6_weight_dim(const Weight& w);

}  // namespace cech23
