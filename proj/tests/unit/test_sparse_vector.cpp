#include <doctest.h>

#include <snorm/rng.hpp>
#include <snorm/schreier.hpp>
#include <snorm/sparse_vector.hpp>

#include <stdexcept>
#include <vector>

using namespace snorm;

TEST_SUITE("sparse_vector") {

TEST_CASE("construction normalizes order, merges duplicates, drops zeros") {
  const SparseVector x({{5, Rational(1, 3)}, {2, Rational(-1)}, {5, Rational(2, 3)}});
  CHECK_EQ(x.entries().size(), 2);
  CHECK_EQ(x.coordinate(2), Rational(-1));
  CHECK_EQ(x.coordinate(5), Rational(1));
  CHECK_EQ(x.coordinate(3), Rational(0));

  const SparseVector cancels({{3, Rational(1, 2)}, {3, Rational(-1, 2)}});
  CHECK(cancels.is_zero());
  CHECK_EQ(cancels, SparseVector{});

  CHECK_THROWS_AS(SparseVector({{0, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("support queries") {
  const SparseVector x({{4, Rational(1)}, {9, Rational(-2, 7)}});
  CHECK_EQ(x.min_index(), 4);
  CHECK_EQ(x.max_index(), 9);
  CHECK_EQ(x.support(), IndexSet({4, 9}));
  CHECK_EQ(x.support_size(), 2);

  const SparseVector zero;
  CHECK_EQ(zero.min_index(), 0);
  CHECK_EQ(zero.max_index(), 0);
  CHECK(zero.support().empty());
}

TEST_CASE("arithmetic: scaling, addition, subtraction, restriction") {
  const SparseVector x({{1, Rational(1, 2)}, {3, Rational(-1, 3)}});
  const SparseVector y({{3, Rational(1, 3)}, {4, Rational(2)}});

  CHECK_EQ(x.scaled(Rational(-2)),
           SparseVector({{1, Rational(-1)}, {3, Rational(2, 3)}}));
  CHECK(x.scaled(Rational(0)).is_zero());

  const SparseVector sum = x + y;
  CHECK_EQ(sum, SparseVector({{1, Rational(1, 2)}, {4, Rational(2)}}));
  CHECK((x - x).is_zero());
  CHECK_EQ(sum - y, x);

  CHECK_EQ(x.restricted(IndexSet({1, 2})), SparseVector({{1, Rational(1, 2)}}));
  CHECK(x.restricted(IndexSet({7, 9})).is_zero());
  CHECK_EQ(x.restricted(x.support()), x);
}

TEST_CASE("partial absolute sums") {
  const SparseVector x({{4, Rational(1, 2)}, {5, Rational(-1, 3)}});
  CHECK_EQ(abs_sum(x, IndexSet({4, 5})), Rational(5, 6));
  CHECK_EQ(abs_sum(x, IndexSet({4})), Rational(1, 2));
  CHECK_EQ(abs_sum(x, IndexSet({1, 2, 3})), Rational(0));
  CHECK_EQ(l1_norm(x), Rational(5, 6));
  CHECK_EQ(linf_norm(x), Rational(1, 2));
  CHECK_EQ(linf_norm(SparseVector{}), Rational(0));
}

TEST_CASE("partial absolute sums are additive over disjoint index sets") {
  SplitMix64 gen(42);
  for (int trial = 0; trial < 25; ++trial) {
    const SparseVector x = random_vector(gen, 24);
    std::vector<std::uint32_t> left, right;
    for (std::uint32_t j = 1; j <= 24; ++j) {
      (gen.below(2) == 0 ? left : right).push_back(j);
    }
    if (left.empty() || right.empty()) continue;
    const Rational split =
        abs_sum(x, IndexSet(left)) + abs_sum(x, IndexSet(right));
    CHECK_EQ(split, l1_norm(x));
  }
}

TEST_CASE("unit vectors") {
  CHECK_EQ(unit_vector(7), SparseVector({{7, Rational(1)}}));
  CHECK_EQ(abs_sum(unit_vector(7), IndexSet({7})), Rational(1));
  CHECK_THROWS_AS(unit_vector(0), std::invalid_argument);
}

TEST_CASE("uniform block vectors carry coordinate sum one") {
  CHECK_EQ(uniform_block_vector(1), unit_vector(1));
  const SparseVector x3 = uniform_block_vector(3);
  CHECK_EQ(x3.support(), IndexSet::interval(4, 7));
  for (std::uint32_t j = 4; j <= 7; ++j) CHECK_EQ(x3.coordinate(j), Rational(1, 4));
  for (int n = 1; n <= 10; ++n) {
    CHECK_EQ(abs_sum(uniform_block_vector(n), dyadic_block(n)), Rational(1));
  }
}

TEST_CASE("harmonic block sums") {
  const SparseVector y33 = harmonic_block_sum(3, 3);
  CHECK_EQ(y33, uniform_block_vector(3).scaled(Rational(1, 3)));
  for (std::uint32_t j = 4; j <= 7; ++j) CHECK_EQ(y33.coordinate(j), Rational(1, 12));

  const SparseVector y34 = harmonic_block_sum(3, 4);
  CHECK_EQ(y34.support(), IndexSet::interval(4, 15));
  for (std::uint32_t j = 4; j <= 7; ++j) CHECK_EQ(y34.coordinate(j), Rational(1, 12));
  for (std::uint32_t j = 8; j <= 15; ++j) CHECK_EQ(y34.coordinate(j), Rational(1, 32));
  CHECK_EQ(abs_sum(y34, dyadic_block(3)), Rational(1, 3));
  CHECK_EQ(abs_sum(y34, dyadic_block(4)), Rational(1, 4));

  // Coordinates are positive and non-increasing across the support.
  const SparseVector y47 = harmonic_block_sum(4, 7);
  CHECK_EQ(y47.support(), IndexSet::interval(8, 127));
  Rational prev = y47.coordinate(8);
  for (std::uint32_t j = 8; j <= 127; ++j) {
    const Rational c = y47.coordinate(j);
    CHECK(c > 0);
    CHECK(c <= prev);
    prev = c;
  }

  CHECK_THROWS_AS(harmonic_block_sum(4, 3), std::domain_error);
  CHECK_THROWS_AS(harmonic_block_sum(0, 3), std::domain_error);
}

}  // TEST_SUITE
