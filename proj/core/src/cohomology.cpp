#include "cech23/cohomology.hpp"

namespace cech23 {

IntCohomology cohomology_over_integers(const Weight& w, unsigned level) {
    CechComplex<Int> c = build_complex<Int>(w, level, CoeffDomain::integers());
    IntCohomology out{w, level, c.dims(), {}};
    for (int j = 0; j <= 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        IntMatrix d_in = j > 0 ? c.d[ju - 1] : IntMatrix(out.term_dims[0], 0);
        IntMatrix d_out = j < 3 ? c.d[ju] : IntMatrix(0, out.term_dims[3]);
        out.h[ju] = integer_cohomology(d_in, d_out);
    }
    return out;
}

DeathReport death_level(std::uint64_t p, unsigned n_max) {
    if (!is_prime_u64(p) || p > fp_max_modulus)
        throw std::invalid_argument("death_level: p must be a prime below 2^31");
    if (n_max < 1) throw std::invalid_argument("death_level: n_max must be >= 1");
    DeathReport r;
    r.p = p;
    r.probed_lo = 1;
    r.probed_hi = n_max;
    CoeffDomain dom = CoeffDomain::prime_field(p);
    for (unsigned n = 1; n <= n_max; ++n) {
        bool hit = class_in_image<Fp>(n, dom);
        r.in_image.push_back(hit);
        if (hit && !r.death_level) r.death_level = n;
    }
    return r;
}

namespace {

UctReport uct_from_differentials(const std::array<IntMatrix, 3>& d, std::uint64_t p,
                                 const Weight& w, unsigned level) {
    if (!is_prime_u64(p) || p > fp_max_modulus)
        throw std::invalid_argument("universal_coefficients_check: bad prime");
    std::array<std::size_t, 4> dims = {d[0].cols(), d[1].cols(), d[2].cols(), d[2].rows()};
    if (d[0].rows() != dims[1] || d[1].rows() != dims[2])
        throw std::invalid_argument("universal_coefficients_check: chain shape mismatch");

    std::array<IntegerCohomology, 4> hz;
    for (int j = 0; j <= 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        IntMatrix d_in = j > 0 ? d[ju - 1] : IntMatrix(dims[0], 0);
        IntMatrix d_out = j < 3 ? d[ju] : IntMatrix(0, dims[3]);
        hz[ju] = integer_cohomology(d_in, d_out);
    }

    std::array<std::size_t, 3> rk{};
    for (int j = 0; j < 3; ++j)
        rk[static_cast<std::size_t>(j)] = rank_over_field(reduce_mod_p(d[static_cast<std::size_t>(j)], p));

    auto p_torsion = [&](const IntegerCohomology& h) {
        std::size_t c = 0;
        for (const Int& f : h.torsion)
            if (mpz_divisible_ui_p(f.get_mpz_t(), static_cast<unsigned long>(p))) ++c;
        return c;
    };

    UctReport rep;
    rep.w = w;
    rep.level = level;
    rep.p = p;
    rep.ok = true;
    for (int j = 0; j <= 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        UctRow row;
        row.degree = j;
        std::size_t cut = (j < 3 ? rk[ju] : 0) + (j > 0 ? rk[ju - 1] : 0);
        row.mod_p_dim = dims[ju] - cut;
        row.free_rank = hz[ju].free_rank;
        row.tors_here = p_torsion(hz[ju]);
        row.tors_above = j < 3 ? p_torsion(hz[ju + 1]) : 0;
        row.ok = row.mod_p_dim == row.free_rank + row.tors_here + row.tors_above;
        rep.rows[ju] = row;
        rep.ok = rep.ok && row.ok;
    }
    return rep;
}

}  // namespace

UctReport universal_coefficients_check(const Weight& w, unsigned level, std::uint64_t p) {
    CechComplex<Int> c = build_complex<Int>(w, level, CoeffDomain::integers());
    return uct_from_differentials(c.d, p, w, level);
}

UctReport universal_coefficients_check(const std::array<IntMatrix, 3>& d, std::uint64_t p) {
    return uct_from_differentials(d, p, Weight{}, 0);
}

std::size_t h6_weight_dim(const Weight& w) {
    return weight_dim(-w + -product_weight());
}

}  // namespace cech23
