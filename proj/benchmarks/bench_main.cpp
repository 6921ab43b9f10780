#include <benchmark/benchmark.h>

#include "asailab/asairep.hpp"
#include "asailab/eisenstein.hpp"
#include "asailab/heckealg.hpp"
#include "asailab/lseries.hpp"

using namespace asailab;

namespace {

const HilbertEigenform& delta_bc() {
  static const HilbertEigenform f = base_change(discriminant_form_data(2000), RealQuadraticField(5), 2000);
  return f;
}

void BM_BaseChange(benchmark::State& st) {
  auto cl = discriminant_form_data(st.range(0));
  RealQuadraticField F(5);
  for (auto _ : st) benchmark::DoNotOptimize(base_change(cl, F, st.range(0)));
}
BENCHMARK(BM_BaseChange)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_AsaiCharpoly(benchmark::State& st) {
  const auto& f = delta_bc();
  for (auto _ : st)
    for (std::int64_t ell : {2, 3, 7, 11, 19, 29, 31, 41})
      benchmark::DoNotOptimize(asai_charpoly(f, ell));
}
BENCHMARK(BM_AsaiCharpoly);

void BM_EulerCoefficients(benchmark::State& st) {
  const auto& f = delta_bc();
  for (auto _ : st) benchmark::DoNotOptimize(check_euler_coefficients(f, st.range(0)));
}
BENCHMARK(BM_EulerCoefficients)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ImprimitiveL(benchmark::State& st) {
  const auto& f = delta_bc();
  for (auto _ : st) benchmark::DoNotOptimize(imprimitive_L(f, cplx(30, 1), 44));
}
BENCHMARK(BM_ImprimitiveL);

void BM_LatticeSum(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(eisenstein_lattice_sum(2, Q(1, 3), cplx(0.1L, 1.2L), cplx(1.5L, 0.5L), static_cast<int>(st.range(0))));
}
BENCHMARK(BM_LatticeSum)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EisensteinContinued(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eisenstein_continued(3, Q(2, 5), cplx(0.1L, 0.9L), cplx(0.3L, 2)));
}
BENCHMARK(BM_EisensteinContinued);

void BM_SplitIdentity(benchmark::State& st) {
  RealQuadraticField F(5);
  for (auto _ : st) benchmark::DoNotOptimize(verify_split_x2_identity(F, 11));
}
BENCHMARK(BM_SplitIdentity);

}  // namespace

BENCHMARK_MAIN();
