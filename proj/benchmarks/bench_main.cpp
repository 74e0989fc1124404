#include <benchmark/benchmark.h>

#include "cech23/cohomology.hpp"
#include "cech23/residue.hpp"

using namespace cech23;

namespace {

const Weight kDiag = diagnostic_weight();
const CoeffDomain Q = CoeffDomain::rationals();
const CoeffDomain Z = CoeffDomain::integers();

void BM_BuildComplex(benchmark::State& state) {
    const auto level = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        CechComplex<Rat> c = build_complex<Rat>(kDiag, level, Q);
        benchmark::DoNotOptimize(c.d[2]);
    }
}
BENCHMARK(BM_BuildComplex)->Arg(2)->Arg(4)->Arg(8);

void BM_FieldCohomology(benchmark::State& state) {
    const auto level = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        FieldCohomology fc = cohomology_over_field<Rat>(kDiag, level, Q);
        benchmark::DoNotOptimize(fc.h);
    }
}
BENCHMARK(BM_FieldCohomology)->Arg(2)->Arg(4)->Arg(8);

void BM_PrimeFieldCohomology(benchmark::State& state) {
    const auto level = static_cast<unsigned>(state.range(0));
    const CoeffDomain f2 = CoeffDomain::prime_field(2);
    for (auto _ : state) {
        FieldCohomology fc = cohomology_over_field<Fp>(kDiag, level, f2);
        benchmark::DoNotOptimize(fc.h);
    }
}
BENCHMARK(BM_PrimeFieldCohomology)->Arg(4)->Arg(8);

void BM_IntegerCohomology(benchmark::State& state) {
    const auto level = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        IntCohomology ic = cohomology_over_integers(kDiag, level);
        benchmark::DoNotOptimize(ic.h);
    }
}
BENCHMARK(BM_IntegerCohomology)->Arg(2)->Arg(4);

void BM_SmithNormalForm(benchmark::State& state) {
    const auto level = static_cast<unsigned>(state.range(0));
    CechComplex<Int> c = build_complex<Int>(kDiag, level, Z);
    for (auto _ : state) {
        SmithNormalForm s = smith_normal_form(c.d[2]);
        benchmark::DoNotOptimize(s.d);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5);

void BM_WeightEnumeration(benchmark::State& state) {
    const auto k = state.range(0);
    Weight w = Weight::of(3 * k, 3 * k, 2 * k, 2 * k, 2 * k);
    for (auto _ : state) {
        std::vector<Monomial> basis = enumerate_basis(w);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_WeightEnumeration)->Arg(4)->Arg(16);

void BM_IntegrandEvaluation(benchmark::State& state) {
    CycleParams p{0.7, 1.3, 2.1, 0.6, 0.4, 1.9, 0.5};
    CyclePoint x = cycle_point(p);
    Integrand phi = Integrand::inv_f123();
    for (auto _ : state) {
        Complex v = evaluate_integrand(phi, x) * pullback_jacobian_det(p);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_IntegrandEvaluation);

void BM_Quadrature(benchmark::State& state) {
    QuadratureOptions opt;
    opt.grid = static_cast<std::size_t>(state.range(0));
    opt.threads = 1;
    for (auto _ : state) {
        IntegralResult r = integrate(Integrand::inv_f123(), 0.0, opt);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Quadrature)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
