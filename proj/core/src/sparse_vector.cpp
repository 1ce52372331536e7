#include "snorm/sparse_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace snorm {

SparseVector::SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const Entry& e : entries_)
    if (e.index < 1) throw std::invalid_argument("vector indices must be >= 1");
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (Entry& e : entries_) {
    if (!merged.empty() && merged.back().index == e.index)
      merged.back().value += e.value;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  entries_ = std::move(merged);
}

SparseVector::SparseVector(std::initializer_list<Entry> entries)
    : SparseVector(std::vector<Entry>(entries)) {}

Rational SparseVector::coordinate(std::uint32_t j) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), j,
      [](const Entry& e, std::uint32_t idx) { return e.index < idx; });
  if (it != entries_.end() && it->index == j) return it->value;
  return Rational(0);
}

std::uint32_t SparseVector::max_index() const {
  return entries_.empty() ? 0 : entries_.back().index;
}

std::uint32_t SparseVector::min_index() const {
  return entries_.empty() ? 0 : entries_.front().index;
}

IndexSet SparseVector::support() const {
  std::vector<std::uint32_t> idx;
  idx.reserve(entries_.size());
  for (const Entry& e : entries_) idx.push_back(e.index);
  return IndexSet(std::move(idx));
}

SparseVector SparseVector::scaled(const Rational& c) const {
  if (c == 0) return SparseVector();
  SparseVector out;
  out.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) out.entries_.push_back({e.index, e.value * c});
  return out;
}

SparseVector SparseVector::restricted(const IndexSet& s) const {
  SparseVector out;
  for (const Entry& e : entries_)
    if (s.contains(e.index)) out.entries_.push_back(e);
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    if (j == b.entries_.size() ||
        (i < a.entries_.size() && a.entries_[i].index < b.entries_[j].index)) {
      out.entries_.push_back(a.entries_[i++]);
    } else if (i == a.entries_.size() || b.entries_[j].index < a.entries_[i].index) {
      out.entries_.push_back(b.entries_[j++]);
    } else {
      Rational v = a.entries_[i].value + b.entries_[j].value;
      if (v != 0) out.entries_.push_back({a.entries_[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  return a + b.scaled(Rational(-1));
}

std::string SparseVector::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(entries_[i].index);
    out += ": ";
    out += fraction_string(entries_[i].value);
  }
  out += '}';
  return out;
}

Rational abs_sum(const SparseVector& x, const IndexSet& s) {
  Rational total(0);
  // Both sequences are sorted; walk them together.
  auto it = x.entries().begin();
  for (std::uint32_t j : s) {
    while (it != x.entries().end() && it->index < j) ++it;
    if (it == x.entries().end()) break;
    if (it->index == j) total += abs_value(it->value);
  }
  return total;
}

Rational l1_norm(const SparseVector& x) {
  Rational total(0);
  for (const SparseVector::Entry& e : x.entries()) total += abs_value(e.value);
  return total;
}

Rational linf_norm(const SparseVector& x) {
  Rational best(0);
  for (const SparseVector::Entry& e : x.entries()) {
    Rational a = abs_value(e.value);
    if (a > best) best = std::move(a);
  }
  return best;
}

SparseVector unit_vector(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("basis index must be >= 1");
  return SparseVector({{n, Rational(1)}});
}

SparseVector uniform_block_vector(int n) {
  const IndexSet block = dyadic_block(n);
  const Rational weight(BigInt(1), BigInt(1) << (n - 1));
  std::vector<SparseVector::Entry> entries;
  entries.reserve(block.size());
  for (std::uint32_t j : block) entries.push_back({j, weight});
  return SparseVector(std::move(entries));
}

SparseVector harmonic_block_sum(int q, int r) {
  if (q < 1 || q > r) throw std::domain_error("need 1 <= q <= r");
  std::vector<SparseVector::Entry> entries;
  for (int n = q; n <= r; ++n) {
    const Rational weight(BigInt(1), BigInt(n) * (BigInt(1) << (n - 1)));
    for (std::uint32_t j = block_lower(n); j <= block_upper(n); ++j)
      entries.push_back({j, weight});
  }
  return SparseVector(std::move(entries));
}

}  // namespace snorm
