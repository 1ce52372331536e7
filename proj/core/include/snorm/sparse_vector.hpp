#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snorm/rational.hpp"
#include "snorm/schreier.hpp"

namespace snorm {

// A finitely supported sequence of exact rationals, indexed from 1.
// Entries are kept sorted by index; zero coordinates are never stored.
class SparseVector {
 public:
  struct Entry {
    std::uint32_t index;
    Rational value;

    bool operator==(const Entry& other) const = default;
  };

  SparseVector() = default;
  // Accepts entries in any order; duplicate indices are summed; zeros dropped.
  explicit SparseVector(std::vector<Entry> entries);
  SparseVector(std::initializer_list<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Coordinate at index j (0 when j is outside the support).
  Rational coordinate(std::uint32_t j) const;
  // Largest (resp. smallest) index in the support; 0 for the zero vector.
  std::uint32_t max_index() const;
  std::uint32_t min_index() const;
  IndexSet support() const;

  SparseVector scaled(const Rational& c) const;
  // Keeps only the coordinates whose index lies in `s`.
  SparseVector restricted(const IndexSet& s) const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  bool operator==(const SparseVector& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;  // sorted by index, all values nonzero
};

// Sum of |coordinates| of x over the index set s.
Rational abs_sum(const SparseVector& x, const IndexSet& s);
// Sum of |coordinates| over the whole support.
Rational l1_norm(const SparseVector& x);
// Largest |coordinate| (0 for the zero vector).
Rational linf_norm(const SparseVector& x);

// Unit basis vector: coordinate 1 at index n.
SparseVector unit_vector(std::uint32_t n);
// Uniform vector on dyadic block n: coordinate 2^{-(n-1)} at each index of the
// block, so its coordinate sum is 1.
SparseVector uniform_block_vector(int n);
// Sum over n in [q,r] of (1/n) times the uniform vector on block n; its
// coordinates are positive and non-increasing across [2^{q-1}, 2^r - 1].
SparseVector harmonic_block_sum(int q, int r);

}  // namespace snorm
