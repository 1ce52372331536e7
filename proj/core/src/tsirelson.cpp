#include "snorm/tsirelson.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "snorm/schreier.hpp"

namespace snorm {
namespace {

// Bottom-up solver for window norms R(i,j) = norm of the vector restricted
// to support positions [i, j). Interval restrictions of the vector are
// exactly such windows, so these are the only subproblems the recursion
// ever creates, and every split produces strictly shorter windows.
class WindowSolver {
 public:
  WindowSolver(std::vector<std::uint32_t> idx, std::vector<Rational> mag)
      : idx_(std::move(idx)),
        mag_(std::move(mag)),
        t_(idx_.size()),
        table_(t_ + 1, std::vector<Rational>(t_ + 1, Rational(0))) {}

  Rational solve() {
    for (std::size_t width = 1; width <= t_; ++width)
      for (std::size_t i = 0; i + width <= t_; ++i)
        table_[i][i + width] = compute(i, i + width);
    return t_ == 0 ? Rational(0) : table_[0][t_];
  }

 private:
  const Rational& r(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Rational compute(std::size_t i, std::size_t j) {
    Rational best(0);
    for (std::size_t u = i; u < j; ++u)
      if (mag_[u] > best) best = mag_[u];
    if (j - i < 2) return best;

    // Splitting part. The first interval may start at any position a >= i
    // (starting later raises min E_1 and with it the number of intervals
    // allowed); the k intervals then cover [a, j) contiguously, since
    // widening an interval up to its successor never decreases its norm.
    //
    // comp[b][k] = best split of [b, j) into exactly k intervals. Chains
    // only ever read comp at positions > their start, so comp[i][1] (which
    // would be this very window) is never consulted.
    std::vector<std::vector<Rational>> comp(j);
    for (std::size_t b = j; b-- > i;) {
      const std::size_t max_parts = j - b;
      comp[b].assign(max_parts + 1, Rational(0));
      if (b > i) comp[b][1] = r(b, j);
      for (std::size_t k = 2; k <= max_parts; ++k) {
        Rational val(0);
        for (std::size_t c = b + 1; c + (k - 1) <= j; ++c) {
          Rational cand = r(b, c) + comp[c][k - 1];
          if (cand > val) val = std::move(cand);
        }
        comp[b][k] = std::move(val);
      }
    }

    Rational split_best(0);
    for (std::size_t a = i; a < j; ++a) {
      const std::size_t cap = std::min<std::size_t>(idx_[a], j - a);
      for (std::size_t k = 2; k <= cap; ++k)
        if (comp[a][k] > split_best) split_best = comp[a][k];
    }
    split_best *= Rational(1, 2);
    return std::max(best, split_best);
  }

  std::vector<std::uint32_t> idx_;
  std::vector<Rational> mag_;
  std::size_t t_;
  std::vector<std::vector<Rational>> table_;
};

Rational solve_norm(const SparseVector& x) {
  std::vector<std::uint32_t> idx;
  std::vector<Rational> mag;
  idx.reserve(x.support_size());
  mag.reserve(x.support_size());
  for (const auto& e : x.entries()) {
    idx.push_back(e.index);
    mag.push_back(abs_value(e.value));
  }
  return WindowSolver(std::move(idx), std::move(mag)).solve();
}

}  // namespace

Rational TsirelsonEngine::norm(const SparseVector& x) const {
  if (x.is_zero()) return Rational(0);
  std::string key;
  if (cache_enabled_) {
    key = x.to_string();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Rational value = solve_norm(x);
  if (cache_enabled_) {
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::move(key), value);  // never overwrites an established value
  }
  return value;
}

Rational tsirelson_norm(const SparseVector& x) { return TsirelsonEngine(false).norm(x); }

Rational subsequence_sum_norm(const std::vector<Rational>& values,
                              const std::vector<std::uint32_t>& positions) {
  if (values.size() != positions.size())
    throw std::invalid_argument("values and positions differ in length");
  std::vector<SparseVector::Entry> entries;
  entries.reserve(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (n > 0 && positions[n] <= positions[n - 1])
      throw std::invalid_argument("positions must be strictly increasing");
    entries.push_back({positions[n], values[n]});
  }
  return tsirelson_norm(SparseVector(std::move(entries)));
}

SandwichReport block_sandwich(const std::vector<SparseVector>& xs,
                              std::vector<std::uint32_t> positions) {
  if (xs.empty()) throw std::invalid_argument("need at least one block summand");
  if (positions.empty()) {
    positions.reserve(xs.size());
    for (std::size_t n = 0; n < xs.size(); ++n)
      positions.push_back(block_upper(static_cast<int>(n) + 1));
  }
  if (positions.size() != xs.size())
    throw std::invalid_argument("positions and summands differ in length");

  TsirelsonEngine engine;
  SparseVector sum;
  std::vector<Rational> norms;
  norms.reserve(xs.size());
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const int block = static_cast<int>(n) + 1;
    if (!xs[n].is_zero() && (xs[n].min_index() < block_lower(block) ||
                             xs[n].max_index() > block_upper(block)))
      throw std::invalid_argument("summand " + std::to_string(block) +
                                  " is not supported in dyadic block " +
                                  std::to_string(block));
    if (positions[n] < block_lower(block) || positions[n] > block_upper(block))
      throw std::invalid_argument("position " + std::to_string(positions[n]) +
                                  " lies outside dyadic block " + std::to_string(block));
    sum = sum + xs[n];
    norms.push_back(engine.norm(xs[n]));
  }

  SandwichReport report;
  report.a_value = engine.norm(sum);
  report.b_value = subsequence_sum_norm(norms, positions);
  if (report.b_value == 0) {
    report.ratio = Rational(1);
    report.lower_ok = report.upper_ok = (report.a_value == 0);
  } else {
    report.ratio = report.a_value / report.b_value;
    report.lower_ok = report.b_value <= 3 * report.a_value;
    report.upper_ok = report.a_value <= 18 * report.b_value;
  }
  return report;
}

L1ComparisonReport l1_comparison(const SparseVector& x) {
  if (x.is_zero()) throw std::invalid_argument("comparison needs a nonzero vector");
  if (!is_admissible(x.support()))
    throw std::invalid_argument("support " + x.support().to_string() +
                                " is not admissible");
  L1ComparisonReport report;
  report.norm_value = tsirelson_norm(x);
  report.l1_value = l1_norm(x);
  report.lower_ok = report.l1_value <= 2 * report.norm_value;
  report.upper_ok = report.norm_value <= report.l1_value;
  return report;
}

}  // namespace snorm
