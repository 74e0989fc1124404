#pragma once

// Torus weights for the 2x3 matrix of variables X[i][j] and enumeration of
// monomial bases of weight slices. A weight is (r1,r2; c1,c2,c3): row sums and
// column sums of the exponent matrix. The slice basis is ordered by the
// flattened exponent tuple (a11,a12,a13,a21,a22,a23), lexicographically
// largest first, so leading monomials come first.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cech23 {

struct Weight {
    // r1, r2, c1, c2, c3
    std::array<std::int64_t, 5> v{};

    static Weight of(std::int64_t r1, std::int64_t r2, std::int64_t c1, std::int64_t c2,
                     std::int64_t c3) {
        return Weight{{r1, r2, c1, c2, c3}};
    }
    std::int64_t row(int i) const { return v[static_cast<std::size_t>(i)]; }
    std::int64_t col(int j) const { return v[static_cast<std::size_t>(2 + j)]; }

    bool consistent() const { return v[0] + v[1] == v[2] + v[3] + v[4]; }

    Weight operator+(const Weight& o) const {
        Weight r;
        for (int i = 0; i < 5; ++i) r.v[i] = v[i] + o.v[i];
        return r;
    }
    Weight operator-() const {
        Weight r;
        for (int i = 0; i < 5; ++i) r.v[i] = -v[i];
        return r;
    }
    Weight scaled_add(const Weight& o, std::int64_t k) const {
        Weight r;
        for (int i = 0; i < 5; ++i) r.v[i] = v[i] + k * o.v[i];
        return r;
    }

    auto operator<=>(const Weight&) const = default;

    std::string str() const;
    static std::optional<Weight> parse(std::string_view s);  // "r1,r2,c1,c2,c3"
};

// exponent matrix of a monomial, flattened row-major
struct Monomial {
    std::array<std::int32_t, 6> e{};

    std::int32_t& at(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
    std::int32_t at(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }

    Monomial operator+(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 6; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    auto operator<=>(const Monomial&) const = default;

    std::string str() const;  // e.g. "X11^2*X23"
};

// basis display order: lexicographically largest exponent tuple first
struct LeadingFirst {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.e > b.e; }
};

Weight weight_of(const Monomial& m);

// all monomials of the given weight, in LeadingFirst order; empty when the
// weight is inconsistent or has a negative entry
std::vector<Monomial> enumerate_basis(const Weight& w);

std::size_t weight_dim(const Weight& w);

// index of m in enumerate_basis(weight_of(m)) without materializing the basis;
// returns position among monomials of the same weight
std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m);

// generator weights: wt(f_i) has row sums (1,1) and column sums 1 except 0 in
// column i
Weight generator_weight(int i);
Weight product_weight();  // wt(f1*f2*f3) = (3,3;2,2,2)

}  // namespace cech23
