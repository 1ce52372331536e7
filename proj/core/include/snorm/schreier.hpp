#ifndef SNORM_SCHREIER_HPP
#define SNORM_SCHREIER_HPP
//
// Schreier-admissible set combinatorics on 1-based indices.
//
// A non-empty finite set M of positive integers is admissible when
// |M| <= min M.  Families N_1 < N_2 < ... (max of each set below the min of
// the next) of admissible sets are the certificates over which the sequence
// space norms in this project are defined.  The dyadic blocks
// M_n = [2^(n-1), 2^n) partition the positive integers into admissible
// intervals of doubling length; upper_endpoints maps a set to the upper end
// points 2^k - 1 of the blocks it meets.
//
// Everything here is a pure function on immutable values.
//

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snorm {

/// Strictly increasing finite list of positive (1-based) indices.
/// May be empty; emptiness is rejected at the use sites that forbid it.
class IndexSet {
 public:
  IndexSet() = default;
  /// Validates: strictly increasing, all elements >= 1.
  explicit IndexSet(std::vector<std::uint32_t> elements);
  IndexSet(std::initializer_list<std::uint32_t> elements);

  /// The integer interval [lo, hi] (inclusive); requires 1 <= lo <= hi.
  static IndexSet interval(std::uint32_t lo, std::uint32_t hi);

  const std::vector<std::uint32_t>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  std::uint32_t min() const;
  std::uint32_t max() const;
  bool contains(std::uint32_t j) const;

  bool operator==(const IndexSet&) const = default;
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::string to_string() const;  // "{a,b,c}"

 private:
  std::vector<std::uint32_t> elements_;
};

/// Ordered family of index sets, intended to be admissible and successive.
/// Kept as plain data so that invalid candidates can be built and then
/// rejected with a precise diagnostic by validate_partition.
struct AdmissiblePartition {
  std::vector<IndexSet> sets;

  bool operator==(const AdmissiblePartition&) const = default;
};

/// True iff |s| <= min s.  Throws std::invalid_argument on the empty set:
/// admissibility is defined for non-empty sets only.
bool is_admissible(const IndexSet& s);

/// True iff max of each set < min of the next.  Each set must be non-empty.
bool is_successive(std::span<const IndexSet> sets);
bool is_successive(const std::vector<IndexSet>& sets);

/// Throws std::invalid_argument naming the first offending set if any member
/// is empty or inadmissible, or any consecutive pair is not successive.
void validate_partition(const AdmissiblePartition& partition);

/// Lower end point m_n = 2^(n-1) of the n-th dyadic block; n >= 1.
std::uint32_t block_lower(int n);

/// Upper end point 2^n - 1 of the n-th dyadic block (= m_{n+1} - 1).
std::uint32_t block_upper(int n);

/// The dyadic block M_n = [2^(n-1), 2^n) as an explicit set.
IndexSet dyadic_block(int n);

/// The unique n with 2^(n-1) <= j < 2^n.  Throws std::domain_error for j < 1.
int block_index(std::uint32_t j);

/// { 2^k - 1 : N meets the k-th dyadic block }.  N must be non-empty.
/// For admissible N the result is again admissible
/// (min uep >= min N >= |N| >= |uep|).
IndexSet upper_endpoints(const IndexSet& n);

}  // namespace snorm

#endif  // SNORM_SCHREIER_HPP
