// Serial GMP reference versus the OpenMP integer kernel for the brute-force
// Lipschitz sup, on targets with 6..12 non-null atoms.

#include <benchmark/benchmark.h>

#include "measalg/generator.hpp"
#include "measalg/kernels.hpp"

namespace {

measalg::BooleanHom make_hom(std::size_t atoms) {
  measalg::GeneratorConfig config;
  config.min_atoms = atoms;
  config.max_atoms = atoms;
  config.null_percent = 0;
  config.infinite_percent = 0;
  config.max_numerator = 16;
  measalg::InstanceRng rng(2024, atoms);
  // Positive numerators only, so every target atom is non-null.
  for (;;) {
    const auto map = measalg::random_instance(rng, config);
    if (map.target()->null_atoms() == 0 && map.source()->null_atoms() == 0) {
      return measalg::induced_homomorphism(map);
    }
  }
}

void BM_PairSupReference(benchmark::State& state) {
  const auto hom = make_hom(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measalg::kernels::pair_sup_reference(hom));
  }
}

void BM_PairSupParallel(benchmark::State& state) {
  const auto hom = make_hom(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(measalg::kernels::pair_sup_parallel(hom));
  }
}

}  // namespace

BENCHMARK(BM_PairSupReference)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSupParallel)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
