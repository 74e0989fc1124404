#pragma once

// Numeric verification of the residue pairing on the compact 6-cycle inside
// the complement of V(f1 f2 f3). The cycle is X = k * M(t, lambda) with k
// running over SU(2) (Hopf coordinates alpha, beta, delta) and M a 2x3 matrix
// of unit-circle variables t_j = exp(i theta_j); on it the minors are
// (t1, t1 t2, t3) for every lambda. Integrals of phi * dX11^...^dX23 are
// computed by pulling back through the closed-form 6x6 jacobian.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cech23/polynomial.hpp"

namespace cech23 {

using Complex = std::complex<double>;
using CyclePoint = Eigen::Matrix<Complex, 2, 3>;
using Jacobian = Eigen::Matrix<Complex, 6, 6>;

struct CycleParams {
    double theta1 = 0, theta2 = 0, theta3 = 0;  // circle angles
    double alpha = 0, beta = 0, delta = 0;      // SU(2) Hopf coordinates
    double lambda = 0;                          // deformation parameter
};

CyclePoint cycle_point(const CycleParams& p);

// maximal minors (f1, f2, f3) of an arbitrary 2x3 matrix, f_i dropping column i
std::array<Complex, 3> minors_of(const CyclePoint& x);

// d(vec X)/d(theta1,theta2,theta3,alpha,beta,delta), X flattened row-major
// (X11,X12,X13,X21,X22,X23); closed-form analytic derivatives
Jacobian pullback_jacobian(const CycleParams& p);
Complex pullback_jacobian_det(const CycleParams& p);

// central differences, for cross-checking the analytic jacobian
Jacobian finite_difference_jacobian(const CycleParams& p, double step = 1e-5);

class poisoned_evaluation : public std::runtime_error {
  public:
    explicit poisoned_evaluation(const std::string& what) : std::runtime_error(what) {}
};

// phi = numerator / (f1^e1 * f2^e2 * f3^e3)
struct Integrand {
    std::string label;
    Polynomial<Int> numerator = Polynomial<Int>::one(CoeffDomain::integers());
    std::array<int, 3> den_exp{0, 0, 0};

    static Integrand inv_f123();          // 1/(f1 f2 f3)
    static Integrand inv_f12();           // 1/(f1 f2)
    static Integrand inv_f13();           // 1/(f1 f3)
    static Integrand inv_f23();           // 1/(f2 f3)
    static Integrand poly_over_f23_sq();  // X11*X23/(f2 f3)^2
    static Integrand custom(std::string label, Polynomial<Int> numerator,
                            std::array<int, 3> den_exp);
};

// names accepted by the CLI --phi flag
std::optional<Integrand> parse_integrand(const std::string& name);

// throws poisoned_evaluation when a needed |f_i| < 1e-9 at the point
Complex evaluate_integrand(const Integrand& phi, const CyclePoint& x);

enum class IntegrationMethod { quadrature, monte_carlo };

struct QuadratureOptions {
    IntegrationMethod method = IntegrationMethod::quadrature;
    std::size_t grid = 8;             // nodes per dimension (trapezoid; Gauss-Legendre in alpha)
    std::size_t samples = 1'000'000;  // Monte Carlo sample count
    std::uint64_t seed = 20260814;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct IntegralResult {
    Complex value{};
    double error_estimate = 0;  // grid-halving difference, or MC standard error
    std::size_t evaluations = 0;
    std::string method;
};

IntegralResult integrate(const Integrand& phi, double lambda, const QuadratureOptions& opt);

struct HomotopyCheck {
    std::vector<double> lambdas;
    std::vector<Complex> values;
    double max_abs_deviation = 0;  // over pairs
    double max_rel_deviation = 0;  // deviation / max |value|
};

HomotopyCheck homotopy_invariance_check(const Integrand& phi, const std::vector<double>& lambdas,
                                        const QuadratureOptions& opt);

// nodes and weights on [-1, 1]
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace cech23
