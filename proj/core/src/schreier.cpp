#include "snorm/schreier.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace snorm {

IndexSet::IndexSet(std::vector<std::uint32_t> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) throw std::invalid_argument("index set elements must be >= 1");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("index set must be strictly increasing");
  }
}

IndexSet::IndexSet(std::initializer_list<std::uint32_t> elements)
    : IndexSet(std::vector<std::uint32_t>(elements)) {}

IndexSet IndexSet::interval(std::uint32_t lo, std::uint32_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad interval bounds");
  std::vector<std::uint32_t> v(hi - lo + 1);
  for (std::uint32_t j = lo; j <= hi; ++j) v[j - lo] = j;
  return IndexSet(std::move(v));
}

std::uint32_t IndexSet::min() const {
  if (elements_.empty()) throw std::domain_error("min of empty index set");
  return elements_.front();
}

std::uint32_t IndexSet::max() const {
  if (elements_.empty()) throw std::domain_error("max of empty index set");
  return elements_.back();
}

bool IndexSet::contains(std::uint32_t j) const {
  return std::binary_search(elements_.begin(), elements_.end(), j);
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += '}';
  return out;
}

bool is_admissible(const IndexSet& s) {
  if (s.empty())
    throw std::invalid_argument("admissibility is defined for non-empty sets only");
  return s.size() <= s.min();
}

bool is_successive(std::span<const IndexSet> sets) {
  for (const IndexSet& s : sets)
    if (s.empty()) throw std::invalid_argument("successiveness requires non-empty sets");
  for (std::size_t i = 0; i + 1 < sets.size(); ++i)
    if (sets[i].max() >= sets[i + 1].min()) return false;
  return true;
}

bool is_successive(const std::vector<IndexSet>& sets) {
  return is_successive(std::span<const IndexSet>(sets));
}

void validate_partition(const AdmissiblePartition& partition) {
  for (std::size_t i = 0; i < partition.sets.size(); ++i) {
    const IndexSet& s = partition.sets[i];
    if (s.empty())
      throw std::invalid_argument("partition set " + std::to_string(i + 1) + " is empty");
    if (!is_admissible(s))
      throw std::invalid_argument("partition set " + std::to_string(i + 1) + " " +
                                  s.to_string() + " is not admissible");
    if (i > 0 && partition.sets[i - 1].max() >= s.min())
      throw std::invalid_argument(
          "partition sets " + std::to_string(i) + " and " + std::to_string(i + 1) +
          " are not successive (" + std::to_string(partition.sets[i - 1].max()) +
          " >= " + std::to_string(s.min()) + ")");
  }
}

std::uint32_t block_lower(int n) {
  if (n < 1 || n > 31) throw std::domain_error("block number out of range");
  return std::uint32_t{1} << (n - 1);
}

std::uint32_t block_upper(int n) {
  if (n < 1 || n > 31) throw std::domain_error("block number out of range");
  return (std::uint32_t{1} << n) - 1;
}

IndexSet dyadic_block(int n) { return IndexSet::interval(block_lower(n), block_upper(n)); }

int block_index(std::uint32_t j) {
  if (j < 1) throw std::domain_error("indices are 1-based");
  return std::bit_width(j);
}

IndexSet upper_endpoints(const IndexSet& n) {
  if (n.empty()) throw std::invalid_argument("upper_endpoints of empty set");
  std::vector<std::uint32_t> out;
  int last_block = 0;
  for (std::uint32_t j : n) {
    const int k = block_index(j);
    if (k != last_block) {
      out.push_back(block_upper(k));
      last_block = k;
    }
  }
  return IndexSet(std::move(out));
}

}  // namespace snorm
