#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cech23/residue.hpp"

using namespace cech23;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

CycleParams random_params(std::mt19937_64& rng, double lambda) {
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> half(0.05, std::numbers::pi / 2 - 0.05);
    CycleParams p;
    p.theta1 = ang(rng);
    p.theta2 = ang(rng);
    p.theta3 = ang(rng);
    p.alpha = half(rng);
    p.beta = ang(rng);
    p.delta = ang(rng);
    p.lambda = lambda;
    return p;
}

}  // namespace

TEST_CASE("minors on the cycle are (t1, t1 t2, t3) for every deformation") {
    std::mt19937_64 rng(701);
    for (double lambda : {0.0, 0.25, 0.5, 1.0, -0.7}) {
        for (int t = 0; t < 40; ++t) {
            CycleParams p = random_params(rng, lambda);
            std::array<Complex, 3> f = minors_of(cycle_point(p));
            Complex t1 = std::polar(1.0, p.theta1);
            Complex t2 = std::polar(1.0, p.theta2);
            Complex t3 = std::polar(1.0, p.theta3);
            CHECK(std::abs(f[0] - t1) < 1e-12);
            CHECK(std::abs(f[1] - t1 * t2) < 1e-12);
            CHECK(std::abs(f[2] - t3) < 1e-12);
        }
    }
}

TEST_CASE("minor formulas on a plain numeric matrix") {
    CyclePoint x;
    x << Complex(1), Complex(2), Complex(3), Complex(4), Complex(5), Complex(6);
    std::array<Complex, 3> f = minors_of(x);
    CHECK(std::abs(f[0] - Complex(2 * 6 - 3 * 5)) < 1e-15);
    CHECK(std::abs(f[1] - Complex(3 * 4 - 1 * 6)) < 1e-15);
    CHECK(std::abs(f[2] - Complex(1 * 5 - 2 * 4)) < 1e-15);
}

TEST_CASE("analytic jacobian matches central differences") {
    std::mt19937_64 rng(702);
    for (double lambda : {0.0, 0.5, 1.0}) {
        for (int t = 0; t < 25; ++t) {
            CycleParams p = random_params(rng, lambda);
            Jacobian a = pullback_jacobian(p);
            Jacobian fd = finite_difference_jacobian(p);
            double dev = (a - fd).cwiseAbs().maxCoeff();
            CAPTURE(lambda);
            CHECK(dev < 1e-6);
        }
    }
}

TEST_CASE("jacobian determinant modulus at lambda zero") {
    std::mt19937_64 rng(703);
    for (int t = 0; t < 40; ++t) {
        CycleParams p = random_params(rng, 0.0);
        double want = 2.0 * std::sin(p.alpha) * std::cos(p.alpha);
        CHECK(std::abs(pullback_jacobian_det(p)) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("integrand evaluation against the closed-form minors") {
    std::mt19937_64 rng(704);
    for (int t = 0; t < 30; ++t) {
        CycleParams p = random_params(rng, 0.3);
        CyclePoint x = cycle_point(p);
        Complex t1 = std::polar(1.0, p.theta1);
        Complex t2 = std::polar(1.0, p.theta2);
        Complex t3 = std::polar(1.0, p.theta3);
        Complex got = evaluate_integrand(Integrand::inv_f123(), x);
        CHECK(std::abs(got - 1.0 / (t1 * (t1 * t2) * t3)) < 1e-11);
        Complex got23 = evaluate_integrand(Integrand::inv_f23(), x);
        CHECK(std::abs(got23 - 1.0 / ((t1 * t2) * t3)) < 1e-11);
        Complex gotp = evaluate_integrand(Integrand::poly_over_f23_sq(), x);
        Complex denom = (t1 * t2) * (t1 * t2) * t3 * t3;
        CHECK(std::abs(gotp - x(0, 0) * x(1, 2) / denom) < 1e-11);
    }
}

TEST_CASE("degenerate points poison the evaluation") {
    CyclePoint x = CyclePoint::Zero();  // all minors vanish
    CHECK_THROWS_AS(evaluate_integrand(Integrand::inv_f123(), x), poisoned_evaluation);
    // a matrix with f3 = 0 but f2 nonzero still poisons anything needing f3
    CyclePoint y;
    y << Complex(1), Complex(0), Complex(1), Complex(2), Complex(0), Complex(1);
    CHECK(std::abs(minors_of(y)[2]) < 1e-15);
    CHECK(std::abs(minors_of(y)[1]) > 0.5);
    CHECK_THROWS_AS(evaluate_integrand(Integrand::inv_f23(), y), poisoned_evaluation);
}

TEST_CASE("named integrands parse; junk does not") {
    for (const char* name : {"inv_f123", "inv_f12", "inv_f13", "inv_f23", "poly_over_f23_sq"}) {
        auto phi = parse_integrand(name);
        REQUIRE(phi.has_value());
        CHECK(phi->label == name);
    }
    CHECK_FALSE(parse_integrand("inv_f1234").has_value());
    CHECK_FALSE(parse_integrand("").has_value());
}

TEST_CASE("gauss-legendre nodes and weights") {
    std::vector<double> x, w;
    gauss_legendre(5, x, w);
    REQUIRE(x.size() == 5);
    const double want_x[] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                             0.9061798459386640};
    const double want_w[] = {0.23692688505618908, 0.47862867049936647, 0.5688888888888889,
                             0.47862867049936647, 0.23692688505618908};
    for (int i = 0; i < 5; ++i) {
        CHECK(x[i] == doctest::Approx(want_x[i]).epsilon(1e-13));
        CHECK(w[i] == doctest::Approx(want_w[i]).epsilon(1e-13));
    }
    // weights sum to the interval length, and degree-9 polynomials integrate
    // exactly with 5 nodes
    for (std::size_t n : {1u, 2u, 3u, 8u, 17u}) {
        gauss_legendre(n, x, w);
        double s = 0;
        for (double wi : w) s += wi;
        CHECK(s == doctest::Approx(2.0).epsilon(1e-13));
    }
    gauss_legendre(5, x, w);
    double got = 0;
    for (std::size_t i = 0; i < 5; ++i)
        got += w[i] * (std::pow(x[i], 9) + 3 * std::pow(x[i], 8) - x[i] * x[i]);
    // exact: int_{-1}^{1} (x^9 + 3x^8 - x^2) dx = 0 + 6/9 - 2/3 = 0
    CHECK(got == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("residue integral of the full inverse product") {
    QuadratureOptions opt;
    opt.threads = 1;
    IntegralResult r = integrate(Integrand::inv_f123(), 0.0, opt);
    const double want = -std::pow(kTwoPi, 5);
    CHECK(std::abs(r.value.real()) < 1e-6);
    CHECK(r.value.imag() == doctest::Approx(want).epsilon(1e-9));
    // the estimate compares against the half grid, which is still coarse
    CHECK(r.error_estimate / std::abs(r.value) < 1e-4);
    CHECK(r.method == "quadrature");
    CHECK(r.evaluations > 0);
}

TEST_CASE("quadrature results are deterministic and thread-count independent") {
    QuadratureOptions a;
    a.grid = 6;
    a.threads = 1;
    QuadratureOptions b = a;
    b.threads = 2;
    IntegralResult r1 = integrate(Integrand::inv_f123(), 0.5, a);
    IntegralResult r2 = integrate(Integrand::inv_f123(), 0.5, a);
    IntegralResult r3 = integrate(Integrand::inv_f123(), 0.5, b);
    CHECK(r1.value == r2.value);  // bitwise
    CHECK(r1.value == r3.value);  // reduction order fixed across thread counts
    CHECK(r1.error_estimate == r3.error_estimate);
}

TEST_CASE("monte carlo agrees with quadrature and is seed-reproducible") {
    QuadratureOptions mc;
    mc.method = IntegrationMethod::monte_carlo;
    mc.samples = 200'000;
    mc.threads = 2;
    IntegralResult r = integrate(Integrand::inv_f123(), 0.0, mc);
    const double want = -std::pow(kTwoPi, 5);
    CHECK(std::abs(r.value.imag() - want) < 5 * r.error_estimate + 1e-9);
    CHECK(std::abs(r.value.imag() - want) / std::abs(want) < 0.05);
    CHECK(r.method == "monte_carlo");
    CHECK(r.evaluations == 200'000);

    IntegralResult again = integrate(Integrand::inv_f123(), 0.0, mc);
    CHECK(r.value == again.value);
    mc.seed += 1;
    IntegralResult other = integrate(Integrand::inv_f123(), 0.0, mc);
    CHECK(r.value != other.value);
}

TEST_CASE("deformation does not move the integral") {
    QuadratureOptions opt;
    opt.threads = 2;  // default grid
    HomotopyCheck hc = homotopy_invariance_check(Integrand::inv_f123(), {0.0, 0.5, 1.0}, opt);
    REQUIRE(hc.values.size() == 3);
    CHECK(hc.max_rel_deviation < 1e-12);
    const double want = -std::pow(kTwoPi, 5);
    for (const Complex& v : hc.values) CHECK(std::abs(v - Complex(0, want)) < 1e-6);
}

TEST_CASE("partial inverses integrate to zero") {
    QuadratureOptions opt;
    opt.grid = 6;
    opt.threads = 2;
    const double scale = std::pow(kTwoPi, 5);
    for (Integrand phi : {Integrand::inv_f12(), Integrand::inv_f13(), Integrand::inv_f23(),
                          Integrand::poly_over_f23_sq()}) {
        IntegralResult r = integrate(phi, 0.0, opt);
        CAPTURE(phi.label);
        CHECK(std::abs(r.value) / scale < 1e-9);
    }
}

TEST_CASE("option validation") {
    QuadratureOptions opt;
    opt.grid = 1;
    CHECK_THROWS_AS(integrate(Integrand::inv_f123(), 0.0, opt), std::invalid_argument);
    CHECK_THROWS_AS(Integrand::custom("bad", Polynomial<Int>::one(CoeffDomain::integers()),
                                      {-1, 0, 0}),
                    std::invalid_argument);
}
