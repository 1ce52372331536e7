#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "snorm/rational.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"

namespace snorm {

// Seedable 64-bit generator (splitmix64). Fixed here, with reduction by plain
// modulo, so that seeded reports are reproducible across platforms and
// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound must be positive. The modulo bias
  // is irrelevant for test sampling and keeps the stream portable.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    return next() % bound;
  }

  // Inclusive integer range.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Rational with numerator in [num_lo, num_hi] and denominator in [1, den_hi];
// may be zero.
inline Rational random_rational(SplitMix64& gen, int num_lo = -9, int num_hi = 9,
                                int den_hi = 9) {
  const auto num = gen.range(num_lo, num_hi);
  const auto den = gen.range(1, den_hi);
  return Rational(num, den);
}

// As above but never zero.
inline Rational random_nonzero_rational(SplitMix64& gen, int num_lo = -9,
                                        int num_hi = 9, int den_hi = 9) {
  while (true) {
    Rational r = random_rational(gen, num_lo, num_hi, den_hi);
    if (r != 0) return r;
  }
}

// Vector with support inside [1, max_index]: each coordinate drawn
// independently, zeros dropped.
inline SparseVector random_vector(SplitMix64& gen, std::uint32_t max_index,
                                  int num_lo = -9, int num_hi = 9, int den_hi = 9) {
  std::vector<SparseVector::Entry> entries;
  for (std::uint32_t j = 1; j <= max_index; ++j) {
    Rational value = random_rational(gen, num_lo, num_hi, den_hi);
    if (value != 0) entries.push_back({j, std::move(value)});
  }
  return SparseVector(std::move(entries));
}

// Admissible set with elements <= max_element: the minimum m is drawn first,
// then a size within both admissibility (<= m) and room to the right.
inline IndexSet random_admissible_set(SplitMix64& gen, std::uint32_t max_element) {
  if (max_element < 1) throw std::invalid_argument("max_element must be >= 1");
  const auto m = static_cast<std::uint32_t>(gen.range(1, max_element));
  const std::uint64_t cap = std::min<std::uint64_t>(m, max_element - m + 1);
  const auto size = static_cast<std::uint32_t>(gen.range(1, static_cast<std::int64_t>(cap)));
  std::set<std::uint32_t> rest;
  while (rest.size() + 1 < size)
    rest.insert(static_cast<std::uint32_t>(gen.range(m + 1, max_element)));
  std::vector<std::uint32_t> elems{m};
  elems.insert(elems.end(), rest.begin(), rest.end());
  return IndexSet(std::move(elems));
}

// Nonzero coordinates on every element of a freshly drawn admissible set.
inline SparseVector random_admissible_support_vector(SplitMix64& gen,
                                                     std::uint32_t max_element,
                                                     int num_lo = -9, int num_hi = 9,
                                                     int den_hi = 9) {
  const IndexSet support = random_admissible_set(gen, max_element);
  std::vector<SparseVector::Entry> entries;
  entries.reserve(support.size());
  for (std::uint32_t j : support)
    entries.push_back({j, random_nonzero_rational(gen, num_lo, num_hi, den_hi)});
  return SparseVector(std::move(entries));
}

// Vector supported inside dyadic block n.
inline SparseVector random_block_vector(SplitMix64& gen, int block, int num_lo = -9,
                                        int num_hi = 9, int den_hi = 9) {
  std::vector<SparseVector::Entry> entries;
  for (std::uint32_t j = block_lower(block); j <= block_upper(block); ++j) {
    Rational value = random_rational(gen, num_lo, num_hi, den_hi);
    if (value != 0) entries.push_back({j, std::move(value)});
  }
  return SparseVector(std::move(entries));
}

}  // namespace snorm
