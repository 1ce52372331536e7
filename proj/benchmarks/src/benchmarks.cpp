#include <benchmark/benchmark.h>

#include <snorm/baernstein.hpp>
#include <snorm/rng.hpp>
#include <snorm/schreier.hpp>
#include <snorm/sparse_vector.hpp>
#include <snorm/tsirelson.hpp>

#include <cstdint>
#include <vector>

namespace {

// Norm DP on the harmonic block family; support size grows as 2^r.
void BM_NormHarmonicFamily(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const snorm::SparseVector x = snorm::harmonic_block_sum(3, r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snorm::baernstein_norm(x, 2));
  }
  state.SetComplexityN(static_cast<std::int64_t>(x.support().size()));
}
BENCHMARK(BM_NormHarmonicFamily)->DenseRange(4, 7)->Complexity();

// Norm DP on seeded random vectors with support inside [1, n].
void BM_NormRandomSupport(benchmark::State& state) {
  const auto max_index = static_cast<std::uint32_t>(state.range(0));
  snorm::SplitMix64 gen(7);
  std::vector<snorm::SparseVector> inputs;
  for (int i = 0; i < 16; ++i) {
    inputs.push_back(snorm::random_vector(gen, max_index));
  }
  std::size_t which = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snorm::baernstein_norm(inputs[which], 2));
    which = (which + 1) % inputs.size();
  }
}
BENCHMARK(BM_NormRandomSupport)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

// Exhaustive reference search, for comparison with the DP at small sizes.
void BM_NormBruteForce(benchmark::State& state) {
  const auto max_index = static_cast<std::uint32_t>(state.range(0));
  snorm::SplitMix64 gen(7);
  const snorm::SparseVector x = snorm::random_vector(gen, max_index);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snorm::baernstein_norm_brute_force(x, 2));
  }
}
BENCHMARK(BM_NormBruteForce)->Arg(6)->Arg(8)->Arg(10);

// Implicit-norm solver over all contiguous support windows.
void BM_TsirelsonNorm(benchmark::State& state) {
  const auto max_index = static_cast<std::uint32_t>(state.range(0));
  snorm::SplitMix64 gen(11);
  const snorm::SparseVector x = snorm::random_vector(gen, max_index);
  for (auto _ : state) {
    benchmark::DoNotOptimize(snorm::tsirelson_norm(x));
  }
}
BENCHMARK(BM_TsirelsonNorm)->Arg(8)->Arg(12)->Arg(16);

// Upper-endpoint projection of random admissible sets.
void BM_UpperEndpoints(benchmark::State& state) {
  snorm::SplitMix64 gen(13);
  std::vector<snorm::IndexSet> sets;
  for (int i = 0; i < 64; ++i) {
    sets.push_back(snorm::random_admissible_set(gen, 1u << 14));
  }
  std::size_t which = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snorm::upper_endpoints(sets[which]));
    which = (which + 1) % sets.size();
  }
}
BENCHMARK(BM_UpperEndpoints);

}  // namespace

BENCHMARK_MAIN();
