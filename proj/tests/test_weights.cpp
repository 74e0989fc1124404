#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cech23/weights.hpp"
#include "support/toy_complex.hpp"

using namespace cech23;

namespace {

// independent counting oracle: walk every candidate top row directly
std::size_t brute_dim(const Weight& w) {
    std::size_t n = 0;
    auto cap = [](std::int64_t c) { return std::max<std::int64_t>(c, 0); };
    for (std::int64_t a11 = 0; a11 <= cap(w.col(0)); ++a11)
        for (std::int64_t a12 = 0; a12 <= cap(w.col(1)); ++a12)
            for (std::int64_t a13 = 0; a13 <= cap(w.col(2)); ++a13) {
                if (a11 + a12 + a13 != w.row(0)) continue;
                std::int64_t a21 = w.col(0) - a11, a22 = w.col(1) - a12, a23 = w.col(2) - a13;
                if (a21 < 0 || a22 < 0 || a23 < 0) continue;
                if (a21 + a22 + a23 != w.row(1)) continue;
                ++n;
            }
    return n;
}

Monomial mono(int a11, int a12, int a13, int a21, int a22, int a23) {
    Monomial m;
    m.e = {static_cast<std::int32_t>(a11), static_cast<std::int32_t>(a12),
           static_cast<std::int32_t>(a13), static_cast<std::int32_t>(a21),
           static_cast<std::int32_t>(a22), static_cast<std::int32_t>(a23)};
    return m;
}

}  // namespace

TEST_CASE("weight parsing and rendering round-trip") {
    Weight w = Weight::of(-3, -3, -2, -2, -2);
    CHECK(w.str() == "-3,-3,-2,-2,-2");
    CHECK(Weight::parse("-3,-3,-2,-2,-2") == w);
    CHECK(Weight::parse(w.str()) == w);
    CHECK(!Weight::parse("1,2,3,4").has_value());
    CHECK(!Weight::parse("1,2,3,4,x").has_value());
    CHECK(!Weight::parse("").has_value());
    CHECK(Weight::of(1, 2, 1, 1, 1).consistent());
    CHECK(!Weight::of(1, 1, 1, 1, 1).consistent());
}

TEST_CASE("fixed dimensions") {
    CHECK(weight_dim(Weight::of(3, 3, 2, 2, 2)) == 7);
    CHECK(weight_dim(Weight::of(2, 2, 1, 1, 2)) == 4);
    CHECK(weight_dim(Weight::of(12, 12, 8, 8, 8)) == 61);
    CHECK(weight_dim(Weight::of(0, 0, 0, 0, 0)) == 1);
    CHECK(weight_dim(Weight::of(-3, -3, -2, -2, -2)) == 0);
    CHECK(weight_dim(Weight::of(1, 1, 1, 1, 1)) == 0);   // inconsistent
    CHECK(weight_dim(Weight::of(2, 0, -1, 1, 2)) == 0);  // negative column
}

TEST_CASE("enumeration matches the counting oracle on random weights") {
    testing::Rng rng(2023);
    for (int t = 0; t < 300; ++t) {
        Weight w = testing::random_consistent_weight(rng, 5);
        CAPTURE(w.str());
        std::vector<Monomial> basis = enumerate_basis(w);
        CHECK(basis.size() == weight_dim(w));
        CHECK(basis.size() == brute_dim(w));
        for (const Monomial& m : basis) CHECK(weight_of(m) == w);
        CHECK(std::is_sorted(basis.begin(), basis.end(), LeadingFirst{}));
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis_index(basis, basis[i]) == i);
    }
    // inconsistent weights enumerate to nothing
    for (int t = 0; t < 50; ++t) {
        Weight w = testing::random_consistent_weight(rng, 4);
        w.v[0] += 1;
        CHECK(enumerate_basis(w).empty());
        CHECK(weight_dim(w) == 0);
    }
}

TEST_CASE("basis order is leading-first on a worked slice") {
    std::vector<Monomial> basis = enumerate_basis(Weight::of(2, 2, 1, 1, 2));
    REQUIRE(basis.size() == 4);
    CHECK(basis[0] == mono(1, 1, 0, 0, 0, 2));
    CHECK(basis[1] == mono(1, 0, 1, 0, 1, 1));
    CHECK(basis[2] == mono(0, 1, 1, 1, 0, 1));
    CHECK(basis[3] == mono(0, 0, 2, 1, 1, 0));
}

TEST_CASE("dimension is symmetric in rows and in columns") {
    testing::Rng rng(77);
    for (int t = 0; t < 100; ++t) {
        Weight w = testing::random_consistent_weight(rng, 5);
        CHECK(weight_dim(w) == weight_dim(Weight::of(w.row(1), w.row(0), w.col(0), w.col(1), w.col(2))));
        CHECK(weight_dim(w) == weight_dim(Weight::of(w.row(0), w.row(1), w.col(2), w.col(0), w.col(1))));
    }
}

TEST_CASE("weight arithmetic and the generator weights") {
    CHECK(generator_weight(1) == Weight::of(1, 1, 0, 1, 1));
    CHECK(generator_weight(2) == Weight::of(1, 1, 1, 0, 1));
    CHECK(generator_weight(3) == Weight::of(1, 1, 1, 1, 0));
    CHECK(product_weight() == Weight::of(3, 3, 2, 2, 2));
    CHECK(generator_weight(1) + generator_weight(2) + generator_weight(3) == product_weight());
    Weight w = Weight::of(1, 2, 1, 1, 1);
    CHECK(w.scaled_add(generator_weight(1), 2) == Weight::of(3, 4, 1, 3, 3));
    CHECK(-w == Weight::of(-1, -2, -1, -1, -1));

    Monomial m = mono(2, 0, 0, 0, 1, 1);
    CHECK(weight_of(m) == Weight::of(2, 2, 2, 1, 1));
    CHECK(m.str() == "X11^2*X22*X23");
    CHECK(mono(0, 0, 0, 0, 0, 0).str() == "1");
}
