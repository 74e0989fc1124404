#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cech23/polynomial.hpp"
#include "support/toy_complex.hpp"

using namespace cech23;

namespace {

const CoeffDomain Z = CoeffDomain::integers();

Monomial mono(int a11, int a12, int a13, int a21, int a22, int a23) {
    Monomial m;
    m.e = {static_cast<std::int32_t>(a11), static_cast<std::int32_t>(a12),
           static_cast<std::int32_t>(a13), static_cast<std::int32_t>(a21),
           static_cast<std::int32_t>(a22), static_cast<std::int32_t>(a23)};
    return m;
}

Polynomial<Int> variable(int i, int j) {
    Polynomial<Int> p(Z);
    Monomial m;
    m.at(i, j) = 1;
    p.add_term(m, Int(1));
    return p;
}

}  // namespace

TEST_CASE("the three generators are the signed maximal minors") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> f1(Z), f2(Z), f3(Z);
    f1.add_term(mono(0, 1, 0, 0, 0, 1), Int(1));   // X12*X23
    f1.add_term(mono(0, 0, 1, 0, 1, 0), Int(-1));  // -X13*X22
    f2.add_term(mono(0, 0, 1, 1, 0, 0), Int(1));   // X13*X21
    f2.add_term(mono(1, 0, 0, 0, 0, 1), Int(-1));  // -X11*X23
    f3.add_term(mono(1, 0, 0, 0, 1, 0), Int(1));   // X11*X22
    f3.add_term(mono(0, 1, 0, 1, 0, 0), Int(-1));  // -X12*X21
    CHECK(f[0] == f1);
    CHECK(f[1] == f2);
    CHECK(f[2] == f3);
    CHECK(f[0].str() == "+1*X12*X23 -1*X13*X22");
}

TEST_CASE("row-one syzygy annihilates the generators") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> s = variable(0, 0) * f[0] + variable(0, 1) * f[1] + variable(0, 2) * f[2];
    CHECK(s.is_zero());
    // and the second row as well
    Polynomial<Int> s2 = variable(1, 0) * f[0] + variable(1, 1) * f[1] + variable(1, 2) * f[2];
    CHECK(s2.is_zero());
}

TEST_CASE("weights of generators and products") {
    auto f = minor_generators<Int>(Z);
    for (int i = 0; i < 3; ++i) {
        auto w = f[static_cast<std::size_t>(i)].homogeneous_weight();
        REQUIRE(w.has_value());
        CHECK(*w == generator_weight(i + 1));
    }
    Polynomial<Int> prod = f[0] * f[1] * f[2];
    auto w = prod.homogeneous_weight();
    REQUIRE(w.has_value());
    CHECK(*w == product_weight());
    CHECK(prod.terms().size() == 6);  // one of the 7 slice monomials drops out

    Polynomial<Int> mixed = f[0] + variable(0, 0);
    CHECK(!mixed.homogeneous_weight().has_value());
}

TEST_CASE("powers expand binomially") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> cube = f[0].pow(3);
    // (a - b)^3 with a = X12*X23, b = X13*X22
    CHECK(cube.terms().size() == 4);
    std::vector<Int> coeffs;
    for (const auto& [m, c] : cube.terms()) coeffs.push_back(c);
    CHECK(coeffs == std::vector<Int>{Int(1), Int(-3), Int(3), Int(-1)});
    CHECK(f[0].pow(0) == Polynomial<Int>::one(Z));
    CHECK(f[0].pow(1) == f[0]);
}

TEST_CASE("freshman's dream over a prime field") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        const CoeffDomain fp = CoeffDomain::prime_field(p);
        auto f = minor_generators<Fp>(fp);
        Polynomial<Fp> lhs = f[0].pow(static_cast<unsigned>(p));
        Polynomial<Fp> rhs(fp);
        Monomial a = mono(0, 1, 0, 0, 0, 1), b = mono(0, 0, 1, 0, 1, 0);
        Monomial ap, bp;
        for (int k = 0; k < 6; ++k) {
            ap.e[k] = a.e[k] * static_cast<std::int32_t>(p);
            bp.e[k] = b.e[k] * static_cast<std::int32_t>(p);
        }
        rhs.add_term(ap, Fp(1, p));
        rhs.add_term(bp, Fp(p % 2 ? -1 : 1, p));  // (-1)^p
        CHECK(lhs == rhs);
    }
}

TEST_CASE("domain mismatch is rejected") {
    auto f2 = minor_generators<Fp>(CoeffDomain::prime_field(2));
    auto f3 = minor_generators<Fp>(CoeffDomain::prime_field(3));
    CHECK_THROWS_AS(f2[0] * f3[1], std::invalid_argument);
}

TEST_CASE("multiplication matrix of the full product out of weight zero") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> prod = f[0] * f[1] * f[2];
    IntMatrix m = multiplication_matrix(prod, Weight::of(0, 0, 0, 0, 0));
    REQUIRE(m.rows() == 7);
    REQUIRE(m.cols() == 1);
    std::vector<Int> expect{Int(-1), Int(1), Int(1), Int(0), Int(-1), Int(-1), Int(1)};
    for (std::size_t i = 0; i < 7; ++i) CHECK(m(i, 0) == expect[i]);
}

TEST_CASE("multiplication matrix shape at an empty source slice") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> prod = f[0] * f[1] * f[2];
    // the diagnostic weight slice is empty; the target slice is 1-dimensional
    IntMatrix m = multiplication_matrix(prod, Weight::of(-3, -3, -2, -2, -2));
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 0);
}

TEST_CASE("multiplication matrices compose") {
    testing::Rng rng(11);
    auto f = minor_generators<Int>(Z);
    for (int t = 0; t < 40; ++t) {
        Weight w = testing::random_consistent_weight(rng, 3);
        int i = testing::rand_int(rng, 0, 2), j = testing::rand_int(rng, 0, 2);
        const auto& fi = f[static_cast<std::size_t>(i)];
        const auto& fj = f[static_cast<std::size_t>(j)];
        IntMatrix ab = multiplication_matrix(fi * fj, w);
        IntMatrix a = multiplication_matrix(fj, w);
        IntMatrix b = multiplication_matrix(fi, w + *fj.homogeneous_weight());
        CHECK(ab == b * a);
    }
}

TEST_CASE("rendering") {
    auto f = minor_generators<Int>(Z);
    Polynomial<Int> p = f[0].pow(2);
    CHECK(p.str() == "+1*X12^2*X23^2 -2*X12*X13*X22*X23 +1*X13^2*X22^2");
    CHECK(Polynomial<Int>(Z).str() == "0");
    CHECK(Polynomial<Int>::one(Z).str() == "+1*1");
}
