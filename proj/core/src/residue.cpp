#include "cech23/residue.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>
#include <random>

namespace cech23 {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double half_pi = 0.5 * std::numbers::pi;
constexpr double pole_tol_sq = 1e-18;  // |f| < 1e-9

struct TBlock {
    Complex m[2][3];
    Complex dm[3][2][3];  // d/dtheta_1..3
};

void fill_tblock(Complex t1, Complex t2, Complex t3, double lambda, TBlock& tb) {
    const Complex i(0, 1);
    const Complex q = lambda * t1 * t2 / t3;  // the deforming entry, -lambda t1 t2 / t3
    tb.m[0][0] = -(1.0 - lambda) * t2;
    tb.m[0][1] = 1.0;
    tb.m[0][2] = -q;
    tb.m[1][0] = -t3;
    tb.m[1][1] = 0.0;
    tb.m[1][2] = t1;
    for (auto& row : tb.dm)
        for (auto& r2 : row)
            for (auto& x : r2) x = 0.0;
    tb.dm[0][0][2] = -i * q;
    tb.dm[0][1][2] = i * t1;
    tb.dm[1][0][0] = -i * (1.0 - lambda) * t2;
    tb.dm[1][0][2] = -i * q;
    tb.dm[2][0][2] = i * q;
    tb.dm[2][1][0] = -i * t3;
}

struct Su2Frame {
    Complex k[2][2], ka[2][2], kb[2][2], kd[2][2];
};

void fill_su2(double sa, double ca, Complex eb, Complex ed, Su2Frame& f) {
    // eb = exp(i beta), ed = exp(i delta)
    const Complex i(0, 1);
    const Complex u = ca * eb, v = sa * ed;
    const Complex ub = std::conj(u), vb = std::conj(v);
    f.k[0][0] = u;
    f.k[0][1] = -vb;
    f.k[1][0] = v;
    f.k[1][1] = ub;
    f.ka[0][0] = -sa * eb;
    f.ka[0][1] = -ca * std::conj(ed);
    f.ka[1][0] = ca * ed;
    f.ka[1][1] = -sa * std::conj(eb);
    f.kb[0][0] = i * u;
    f.kb[0][1] = 0.0;
    f.kb[1][0] = 0.0;
    f.kb[1][1] = -i * ub;
    f.kd[0][0] = 0.0;
    f.kd[0][1] = i * vb;
    f.kd[1][0] = i * v;
    f.kd[1][1] = 0.0;
}

inline void mul23(const Complex k[2][2], const Complex m[2][3], Complex out[2][3]) {
    for (int j = 0; j < 3; ++j) {
        out[0][j] = k[0][0] * m[0][j] + k[0][1] * m[1][j];
        out[1][j] = k[1][0] * m[0][j] + k[1][1] * m[1][j];
    }
}

// columns: theta1..3 (k * dM), alpha/beta/delta (dk * M); rows: X row-major
void assemble_jacobian(const TBlock& tb, const Su2Frame& f, Complex j[36]) {
    Complex col[2][3];
    for (int m = 0; m < 3; ++m) {
        mul23(f.k, tb.dm[m], col);
        for (int r = 0; r < 6; ++r) j[static_cast<std::size_t>(r * 6 + m)] = col[r / 3][r % 3];
    }
    const Complex(*dks[3])[2] = {f.ka, f.kb, f.kd};
    for (int c = 0; c < 3; ++c) {
        mul23(dks[c], tb.m, col);
        for (int r = 0; r < 6; ++r) j[static_cast<std::size_t>(r * 6 + 3 + c)] = col[r / 3][r % 3];
    }
}

Complex det6(Complex a[36]) {
    Complex det(1.0, 0.0);
    for (int c = 0; c < 6; ++c) {
        int piv = -1;
        double best = 0.0;
        for (int r = c; r < 6; ++r) {
            const Complex& x = a[r * 6 + c];
            double mag = std::abs(x.real()) + std::abs(x.imag());
            if (mag > best) {
                best = mag;
                piv = r;
            }
        }
        if (piv < 0) return {0.0, 0.0};
        if (piv != c) {
            for (int j = c; j < 6; ++j) std::swap(a[piv * 6 + j], a[c * 6 + j]);
            det = -det;
        }
        det *= a[c * 6 + c];
        const Complex inv = 1.0 / a[c * 6 + c];
        for (int r = c + 1; r < 6; ++r) {
            const Complex f = a[r * 6 + c] * inv;
            if (f.real() == 0.0 && f.imag() == 0.0) continue;
            for (int j = c + 1; j < 6; ++j) a[r * 6 + j] -= f * a[c * 6 + j];
        }
    }
    return det;
}

struct CompiledIntegrand {
    struct Term {
        double coeff;
        std::array<int, 6> exp;
    };
    std::vector<Term> terms;
    std::array<int, 3> den_exp;
};

CompiledIntegrand compile(const Integrand& phi) {
    CompiledIntegrand c;
    c.den_exp = phi.den_exp;
    for (int e : phi.den_exp)
        if (e < 0) throw std::invalid_argument("integrand: negative denominator exponent");
    for (const auto& [m, coeff] : phi.numerator.terms()) {
        CompiledIntegrand::Term t;
        t.coeff = coeff.get_d();
        for (int i = 0; i < 6; ++i) t.exp[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
        c.terms.push_back(t);
    }
    return c;
}

inline Complex ipow(Complex x, int e) {
    Complex r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

inline Complex eval_phi(const CompiledIntegrand& phi, const Complex x[6]) {
    const Complex f1 = x[1] * x[5] - x[2] * x[4];
    const Complex f2 = x[2] * x[3] - x[0] * x[5];
    const Complex f3 = x[0] * x[4] - x[1] * x[3];
    const Complex fs[3] = {f1, f2, f3};
    Complex den(1.0, 0.0);
    for (int i = 0; i < 3; ++i) {
        const int e = phi.den_exp[static_cast<std::size_t>(i)];
        if (!e) continue;
        if (std::norm(fs[i]) < pole_tol_sq)
            throw poisoned_evaluation("integrand pole on the cycle: |f" + std::to_string(i + 1) +
                                      "| < 1e-9 at a node");
        den *= ipow(fs[i], e);
    }
    Complex num(0.0, 0.0);
    for (const auto& t : phi.terms) {
        Complex mono(t.coeff, 0.0);
        for (int i = 0; i < 6; ++i)
            if (t.exp[static_cast<std::size_t>(i)]) mono *= ipow(x[i], t.exp[static_cast<std::size_t>(i)]);
        num += mono;
    }
    return num / den;
}

// phi(X) * det(dX/dp) at one parameter point
Complex node_value(const CompiledIntegrand& phi, const TBlock& tb, const Su2Frame& f) {
    Complex x23[2][3];
    mul23(f.k, tb.m, x23);
    const Complex x[6] = {x23[0][0], x23[0][1], x23[0][2], x23[1][0], x23[1][1], x23[1][2]};
    Complex j[36];
    assemble_jacobian(tb, f, j);
    return eval_phi(phi, x) * det6(j);
}

unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Complex run_quadrature(const CompiledIntegrand& phi, double lambda, std::size_t n,
                       unsigned threads) {
    std::vector<double> gl_x, gl_w;
    gauss_legendre(n, gl_x, gl_w);
    std::vector<double> sa(n), ca(n), wa(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = (gl_x[i] + 1.0) * 0.25 * std::numbers::pi;  // [0, pi/2]
        sa[i] = std::sin(a);
        ca[i] = std::cos(a);
        wa[i] = gl_w[i] * 0.25 * std::numbers::pi;
    }
    std::vector<Complex> circle(n);
    for (std::size_t i = 0; i < n; ++i) {
        double th = two_pi * static_cast<double>(i) / static_cast<double>(n);
        circle[i] = Complex(std::cos(th), std::sin(th));
    }
    const double w_per = two_pi / static_cast<double>(n);  // trapezoid weight, periodic

    // one slice per theta1 node, filled possibly in parallel, reduced in order
    std::vector<Complex> slice(n, Complex(0, 0));
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&](std::size_t i1_lo, std::size_t i1_hi) {
        try {
            for (std::size_t i1 = i1_lo; i1 < i1_hi; ++i1) {
                Complex acc(0, 0);
                TBlock tb;
                Su2Frame fr;
                for (std::size_t i2 = 0; i2 < n; ++i2)
                    for (std::size_t i3 = 0; i3 < n; ++i3) {
                        fill_tblock(circle[i1], circle[i2], circle[i3], lambda, tb);
                        for (std::size_t ia = 0; ia < n; ++ia) {
                            Complex acc_a(0, 0);
                            for (std::size_t ib = 0; ib < n; ++ib)
                                for (std::size_t id = 0; id < n; ++id) {
                                    fill_su2(sa[ia], ca[ia], circle[ib], circle[id], fr);
                                    acc_a += node_value(phi, tb, fr);
                                }
                            acc += wa[ia] * acc_a;
                        }
                    }
                slice[i1] = acc;
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    unsigned nthreads = std::min<std::size_t>(resolve_threads(threads), n);
    if (nthreads <= 1) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    Complex total(0, 0);
    for (const Complex& s : slice) total += s;  // fixed reduction order
    double w5 = w_per * w_per * w_per * w_per * w_per;
    return total * w5;
}

struct McAccum {
    Complex sum{};
    double sum_sq = 0;  // of |value|^2
};

McAccum run_mc_chunk(const CompiledIntegrand& phi, double lambda, std::uint64_t seed,
                     std::size_t chunk_index, std::size_t count) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (chunk_index + 1)));
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    std::uniform_real_distribution<double> alpha(0.0, half_pi);
    McAccum acc;
    TBlock tb;
    Su2Frame fr;
    for (std::size_t s = 0; s < count; ++s) {
        double th1 = angle(rng), th2 = angle(rng), th3 = angle(rng);
        double a = alpha(rng), b = angle(rng), d = angle(rng);
        fill_tblock(Complex(std::cos(th1), std::sin(th1)), Complex(std::cos(th2), std::sin(th2)),
                    Complex(std::cos(th3), std::sin(th3)), lambda, tb);
        fill_su2(std::sin(a), std::cos(a), Complex(std::cos(b), std::sin(b)),
                 Complex(std::cos(d), std::sin(d)), fr);
        Complex v = node_value(phi, tb, fr);
        acc.sum += v;
        acc.sum_sq += std::norm(v);
    }
    return acc;
}

}  // namespace

CyclePoint cycle_point(const CycleParams& p) {
    TBlock tb;
    fill_tblock(Complex(std::cos(p.theta1), std::sin(p.theta1)),
                Complex(std::cos(p.theta2), std::sin(p.theta2)),
                Complex(std::cos(p.theta3), std::sin(p.theta3)), p.lambda, tb);
    Su2Frame fr;
    fill_su2(std::sin(p.alpha), std::cos(p.alpha), Complex(std::cos(p.beta), std::sin(p.beta)),
             Complex(std::cos(p.delta), std::sin(p.delta)), fr);
    Complex x[2][3];
    mul23(fr.k, tb.m, x);
    CyclePoint out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = x[i][j];
    return out;
}

std::array<Complex, 3> minors_of(const CyclePoint& x) {
    return {x(0, 1) * x(1, 2) - x(0, 2) * x(1, 1), x(0, 2) * x(1, 0) - x(0, 0) * x(1, 2),
            x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0)};
}

Jacobian pullback_jacobian(const CycleParams& p) {
    TBlock tb;
    fill_tblock(Complex(std::cos(p.theta1), std::sin(p.theta1)),
                Complex(std::cos(p.theta2), std::sin(p.theta2)),
                Complex(std::cos(p.theta3), std::sin(p.theta3)), p.lambda, tb);
    Su2Frame fr;
    fill_su2(std::sin(p.alpha), std::cos(p.alpha), Complex(std::cos(p.beta), std::sin(p.beta)),
             Complex(std::cos(p.delta), std::sin(p.delta)), fr);
    Complex j[36];
    assemble_jacobian(tb, fr, j);
    Jacobian out;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) out(r, c) = j[r * 6 + c];
    return out;
}

Complex pullback_jacobian_det(const CycleParams& p) {
    Jacobian j = pullback_jacobian(p);
    Complex a[36];
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) a[r * 6 + c] = j(r, c);
    return det6(a);
}

Jacobian finite_difference_jacobian(const CycleParams& p, double step) {
    Jacobian out;
    for (int c = 0; c < 6; ++c) {
        CycleParams hi = p, lo = p;
        double* fields_hi[6] = {&hi.theta1, &hi.theta2, &hi.theta3, &hi.alpha, &hi.beta, &hi.delta};
        double* fields_lo[6] = {&lo.theta1, &lo.theta2, &lo.theta3, &lo.alpha, &lo.beta, &lo.delta};
        *fields_hi[c] += step;
        *fields_lo[c] -= step;
        CyclePoint xh = cycle_point(hi), xl = cycle_point(lo);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) out(3 * i + j, c) = (xh(i, j) - xl(i, j)) / (2 * step);
    }
    return out;
}

Integrand Integrand::inv_f123() { return {"inv_f123", Polynomial<Int>::one(CoeffDomain::integers()), {1, 1, 1}}; }
Integrand Integrand::inv_f12() { return {"inv_f12", Polynomial<Int>::one(CoeffDomain::integers()), {1, 1, 0}}; }
Integrand Integrand::inv_f13() { return {"inv_f13", Polynomial<Int>::one(CoeffDomain::integers()), {1, 0, 1}}; }
Integrand Integrand::inv_f23() { return {"inv_f23", Polynomial<Int>::one(CoeffDomain::integers()), {0, 1, 1}}; }

Integrand Integrand::poly_over_f23_sq() {
    Polynomial<Int> num(CoeffDomain::integers());
    Monomial m;
    m.at(0, 0) = 1;  // X11
    m.at(1, 2) = 1;  // X23
    num.add_term(m, Int(1));
    return {"poly_over_f23_sq", num, {0, 2, 2}};
}

Integrand Integrand::custom(std::string label, Polynomial<Int> numerator,
                            std::array<int, 3> den_exp) {
    for (int e : den_exp)
        if (e < 0) throw std::invalid_argument("integrand: negative denominator exponent");
    return {std::move(label), std::move(numerator), den_exp};
}

std::optional<Integrand> parse_integrand(const std::string& name) {
    if (name == "inv_f123") return Integrand::inv_f123();
    if (name == "inv_f12") return Integrand::inv_f12();
    if (name == "inv_f13") return Integrand::inv_f13();
    if (name == "inv_f23") return Integrand::inv_f23();
    if (name == "poly_over_f23_sq") return Integrand::poly_over_f23_sq();
    return std::nullopt;
}

Complex evaluate_integrand(const Integrand& phi, const CyclePoint& xm) {
    CompiledIntegrand c = compile(phi);
    const Complex x[6] = {xm(0, 0), xm(0, 1), xm(0, 2), xm(1, 0), xm(1, 1), xm(1, 2)};
    return eval_phi(c, x);
}

IntegralResult integrate(const Integrand& phi, double lambda, const QuadratureOptions& opt) {
    CompiledIntegrand c = compile(phi);
    IntegralResult res;
    if (opt.method == IntegrationMethod::quadrature) {
        if (opt.grid < 2) throw std::invalid_argument("integrate: grid must be >= 2");
        std::size_t n = opt.grid;
        std::size_t half = std::max<std::size_t>(2, n / 2);
        Complex full = run_quadrature(c, lambda, n, opt.threads);
        Complex coarse = run_quadrature(c, lambda, half, opt.threads);
        res.value = full;
        res.error_estimate = std::abs(full - coarse);
        auto pow6 = [](std::size_t k) { return k * k * k * k * k * k; };
        res.evaluations = pow6(n) + pow6(half);
        res.method = "quadrature";
    } else {
        if (opt.samples < 1) throw std::invalid_argument("integrate: need at least one sample");
        const std::size_t chunk_size = 65536;
        std::size_t nchunks = (opt.samples + chunk_size - 1) / chunk_size;
        std::vector<McAccum> parts(nchunks);
        std::exception_ptr error;
        std::mutex error_mutex;
        unsigned nthreads = std::min<std::size_t>(resolve_threads(opt.threads), nchunks);
        auto work = [&](std::size_t lo, std::size_t hi) {
            try {
                for (std::size_t ci = lo; ci < hi; ++ci) {
                    std::size_t count = ci + 1 < nchunks ? chunk_size : opt.samples - ci * chunk_size;
                    parts[ci] = run_mc_chunk(c, lambda, opt.seed, ci, count);
                }
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        if (nthreads <= 1) {
            work(0, nchunks);
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (nchunks + nthreads - 1) / nthreads;
            for (unsigned t = 0; t < nthreads; ++t) {
                std::size_t lo = t * chunk, hi = std::min(nchunks, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
        Complex sum(0, 0);
        double sum_sq = 0;
        for (const McAccum& a : parts) {  // fixed order
            sum += a.sum;
            sum_sq += a.sum_sq;
        }
        const double volume = std::pow(two_pi, 5) * half_pi;
        const double kd = static_cast<double>(opt.samples);
        Complex mean = sum / kd;
        double var = std::max(0.0, sum_sq / kd - std::norm(mean));
        res.value = mean * volume;
        res.error_estimate = volume * std::sqrt(var / kd);
        res.evaluations = opt.samples;
        res.method = "monte_carlo";
    }
    return res;
}

HomotopyCheck homotopy_invariance_check(const Integrand& phi, const std::vector<double>& lambdas,
                                        const QuadratureOptions& opt) {
    HomotopyCheck out;
    out.lambdas = lambdas;
    for (double l : lambdas) out.values.push_back(integrate(phi, l, opt).value);
    double maxabs = 0;
    for (const Complex& v : out.values) maxabs = std::max(maxabs, std::abs(v));
    for (std::size_t i = 0; i < out.values.size(); ++i)
        for (std::size_t j = i + 1; j < out.values.size(); ++j)
            out.max_abs_deviation =
                std::max(out.max_abs_deviation, std::abs(out.values[i] - out.values[j]));
    out.max_rel_deviation = out.max_abs_deviation / std::max(maxabs, 1e-300);
    return out;
}

void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                             (static_cast<double>(k) - 1.0) * p0) /
                            static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

}  // namespace cech23
