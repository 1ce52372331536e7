#include <doctest.h>

#include <snorm/rng.hpp>
#include <snorm/schreier.hpp>
#include <snorm/sparse_vector.hpp>
#include <snorm/tsirelson.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

using namespace snorm;

namespace {

// Independent reference implementation of the implicit norm, written against
// the set-shaped definition rather than the interval one the engine uses:
// families may be arbitrary finite sets E_1 < ... < E_k (max below next min)
// with k <= min E_1. Restricted to a support, such a family is a subset of
// the support split into consecutive runs, so the reference enumerates every
// submask and every run split. Each run is a proper submask, so one pass in
// increasing mask order reaches the fixed point.
Rational set_variant_norm(const SparseVector& x) {
  const auto& entries = x.entries();
  const int t = static_cast<int>(entries.size());
  if (t == 0) return Rational(0);
  REQUIRE(t <= 12);  // keeps the 3^t submask sweep honest

  const int full = (1 << t) - 1;
  std::vector<Rational> value(static_cast<std::size_t>(full) + 1, Rational(0));
  for (int mask = 1; mask <= full; ++mask) {
    // Sup norm of the restriction.
    Rational best(0);
    for (int i = 0; i < t; ++i) {
      if ((mask >> i) & 1) best = std::max(best, abs_value(entries[i].value));
    }

    // Every nonempty submask U, split into k >= 2 consecutive runs.
    for (int u = mask; u > 0; u = (u - 1) & mask) {
      std::vector<int> pos;
      for (int i = 0; i < t; ++i) {
        if ((u >> i) & 1) pos.push_back(i);
      }
      const int m = static_cast<int>(pos.size());
      const std::uint32_t first_index = entries[pos.front()].index;
      const int kmax = static_cast<int>(
          std::min<std::uint32_t>(static_cast<std::uint32_t>(m), first_index));
      if (kmax < 2) continue;

      // g[i][k]: best total over splits of the first i list entries into
      // exactly k runs.
      std::vector<std::vector<Rational>> g(
          m + 1, std::vector<Rational>(kmax + 1, Rational(-1)));
      g[0][0] = Rational(0);
      for (int i = 1; i <= m; ++i) {
        for (int k = 1; k <= std::min(i, kmax); ++k) {
          for (int s = k - 1; s < i; ++s) {
            if (g[s][k - 1] < 0) continue;
            int run = 0;
            for (int j = s; j < i; ++j) run |= 1 << pos[j];
            const Rational candidate = g[s][k - 1] + value[run];
            if (candidate > g[i][k]) g[i][k] = candidate;
          }
        }
      }
      for (int k = 2; k <= kmax; ++k) {
        if (g[m][k] < 0) continue;
        best = std::max(best, Rational(g[m][k] / 2));
      }
    }
    value[mask] = best;
  }
  return value[full];
}

SparseVector ones(std::uint32_t lo, std::uint32_t hi) {
  std::vector<SparseVector::Entry> entries;
  for (std::uint32_t j = lo; j <= hi; ++j) entries.push_back({j, Rational(1)});
  return SparseVector(std::move(entries));
}

}  // namespace

TEST_SUITE("tsirelson") {

TEST_CASE("basis vectors and scalings") {
  for (std::uint32_t n : {1u, 2u, 9u, 50u}) {
    CHECK_EQ(tsirelson_norm(unit_vector(n)), Rational(1));
  }
  CHECK_EQ(tsirelson_norm(unit_vector(3).scaled(Rational(-5, 7))), Rational(5, 7));
  CHECK_EQ(tsirelson_norm(SparseVector{}), Rational(0));
}

TEST_CASE("hand-checked sums of basis vectors") {
  // Two units at {2,3}: the pair family gives (1+1)/2 = 1, tying the sup part.
  CHECK_EQ(tsirelson_norm(ones(2, 3)), Rational(1));
  CHECK_EQ(tsirelson_norm(ones(1, 3)), Rational(1));
  // Units on [n+1, 2n] reach n/2 via n singletons.
  CHECK_EQ(tsirelson_norm(ones(3, 4)), Rational(1));
  CHECK_EQ(tsirelson_norm(ones(4, 6)), Rational(3, 2));
  CHECK_EQ(tsirelson_norm(ones(5, 8)), Rational(2));
  CHECK_EQ(tsirelson_norm(ones(9, 16)), Rational(4));
}

TEST_CASE("norm sits between the sup and coordinate-sum norms") {
  SplitMix64 gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseVector x = random_vector(gen, 10);
    const Rational norm = tsirelson_norm(x);
    CHECK(linf_norm(x) <= norm);
    CHECK(norm <= l1_norm(x));
  }
}

TEST_CASE("norm is homogeneous and monotone in coordinate size") {
  SplitMix64 gen(22);
  for (int trial = 0; trial < 12; ++trial) {
    const SparseVector x = random_vector(gen, 10);
    const Rational c = random_nonzero_rational(gen);
    CHECK_EQ(tsirelson_norm(x.scaled(c)), abs_value(c) * tsirelson_norm(x));

    std::vector<SparseVector::Entry> shrunk;
    for (const auto& e : x.entries()) {
      shrunk.push_back({e.index, e.value * Rational(gen.range(0, 3), 3)});
    }
    CHECK(tsirelson_norm(SparseVector(shrunk)) <= tsirelson_norm(x));
  }
}

TEST_CASE("interval engine matches the set-shaped reference") {
  SplitMix64 gen(23);
  std::vector<SparseVector> cases = {
      ones(2, 3),
      ones(5, 8),
      harmonic_block_sum(1, 3),
      SparseVector({{1, Rational(1)}, {4, Rational(-1, 2)}, {6, Rational(1, 3)}}),
      SparseVector({{2, Rational(2)}, {3, Rational(-2)}, {5, Rational(1, 2)},
                    {7, Rational(3)}, {8, Rational(-1, 4)}}),
  };
  for (int trial = 0; trial < 40; ++trial) cases.push_back(random_vector(gen, 8));
  for (const SparseVector& x : cases) {
    CHECK_EQ(tsirelson_norm(x), set_variant_norm(x));
  }
}

TEST_CASE("caching engine returns what a fresh engine computes") {
  const TsirelsonEngine cached(true);
  SplitMix64 gen(24);
  for (int trial = 0; trial < 8; ++trial) {
    const SparseVector x = random_vector(gen, 9);
    const Rational first = cached.norm(x);
    CHECK_EQ(cached.norm(x), first);           // replay from cache
    CHECK_EQ(TsirelsonEngine(false).norm(x), first);  // uncached recomputation
  }
}

TEST_CASE("subsequence sums carry tuple values on chosen positions") {
  CHECK_EQ(subsequence_sum_norm({Rational(1), Rational(1)}, {2, 3}),
           tsirelson_norm(ones(2, 3)));
  CHECK_EQ(subsequence_sum_norm({Rational(5, 7)}, {4}), Rational(5, 7));
  CHECK_EQ(subsequence_sum_norm({}, {}), Rational(0));
  CHECK_THROWS_AS(subsequence_sum_norm({Rational(1)}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subsequence_sum_norm({Rational(1), Rational(1)}, {3, 3}),
                  std::invalid_argument);
}

TEST_CASE("blockwise sandwich on a hand-checked tuple") {
  const std::vector<SparseVector> xs = {unit_vector(1), uniform_block_vector(2)};
  const SandwichReport report = block_sandwich(xs);
  CHECK_EQ(report.a_value, Rational(1));
  CHECK_EQ(report.b_value, Rational(1));
  CHECK_EQ(report.ratio, Rational(1));
  CHECK(report.lower_ok);
  CHECK(report.upper_ok);
}

TEST_CASE("sandwich validates blocks, positions, and emptiness") {
  CHECK_THROWS_AS(block_sandwich({}), std::invalid_argument);
  // First summand must live in the first dyadic block.
  CHECK_THROWS_WITH_AS(block_sandwich({unit_vector(2)}),
                       doctest::Contains("summand 1"), std::invalid_argument);
  // Position for block 1 can only be index 1.
  CHECK_THROWS_WITH_AS(block_sandwich({unit_vector(1)}, {2}),
                       doctest::Contains("position 2"), std::invalid_argument);
  CHECK_THROWS_AS(block_sandwich({unit_vector(1)}, {1, 3}), std::invalid_argument);

  // A zero tuple reports ratio one with both bounds fine.
  const SandwichReport zero = block_sandwich({SparseVector{}, SparseVector{}});
  CHECK_EQ(zero.a_value, Rational(0));
  CHECK_EQ(zero.b_value, Rational(0));
  CHECK_EQ(zero.ratio, Rational(1));
  CHECK(zero.lower_ok);
  CHECK(zero.upper_ok);
}

TEST_CASE("coordinate-sum comparison on admissible supports") {
  const L1ComparisonReport tight = l1_comparison(ones(5, 8));
  CHECK_EQ(tight.norm_value, Rational(2));
  CHECK_EQ(tight.l1_value, Rational(4));
  CHECK(tight.lower_ok);  // boundary case: norm is exactly half the sum
  CHECK(tight.upper_ok);

  const L1ComparisonReport unit = l1_comparison(unit_vector(3));
  CHECK_EQ(unit.norm_value, Rational(1));
  CHECK_EQ(unit.l1_value, Rational(1));

  CHECK_THROWS_AS(l1_comparison(SparseVector{}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(l1_comparison(ones(1, 2)), doctest::Contains("support"),
                       std::invalid_argument);
}

}  // TEST_SUITE
