#include "snorm/baernstein.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace snorm {
namespace {

void require_exact_exponent(unsigned p) {
  if (p < 2) throw std::invalid_argument("exact mode requires an integer exponent >= 2");
}

// Support of a vector, split into parallel index/magnitude arrays. Every set
// in a maximizing family can be cut down to the support without changing its
// score or hurting admissibility (the minimum can only grow, the size only
// shrink), so the whole search runs over support positions.
struct SupportData {
  std::vector<std::uint32_t> idx;  // raw indices, strictly increasing
  std::vector<Rational> mag;       // |coordinate|, all nonzero
  std::size_t size() const { return idx.size(); }
};

SupportData support_data(const SparseVector& x) {
  SupportData s;
  s.idx.reserve(x.support_size());
  s.mag.reserve(x.support_size());
  for (const auto& e : x.entries()) {
    s.idx.push_back(e.index);
    s.mag.push_back(abs_value(e.value));
  }
  return s;
}

// Running sum of the k largest values inserted so far.
class TopSum {
 public:
  explicit TopSum(std::size_t capacity) : capacity_(capacity) {}

  // Returns true when the tracked sum changed.
  bool insert(const Rational& v) {
    if (capacity_ == 0) return false;
    if (kept_.size() < capacity_) {
      kept_.insert(v);
      sum_ += v;
      return true;
    }
    auto smallest = kept_.begin();
    if (v > *smallest) {
      sum_ += v - *smallest;
      kept_.erase(smallest);
      kept_.insert(v);
      return true;
    }
    return false;
  }

  const Rational& sum() const { return sum_; }

 private:
  std::size_t capacity_;
  std::multiset<Rational> kept_;
  Rational sum_{0};
};

// f[a] = best achievable score (p-th power) over families whose sets are
// confined to support positions >= a. A set starting at position a with its
// elements inside the window [a, b) contributes its best score, which keeps
// position a and the idx[a]-1 largest magnitudes strictly inside the window;
// the rest of the family is f[b].
std::vector<Rational> score_table(const SupportData& s, unsigned p) {
  const std::size_t t = s.size();
  std::vector<Rational> f(t + 1, Rational(0));
  for (std::size_t a = t; a-- > 0;) {
    Rational best = f[a + 1];  // position a used by no set
    TopSum companions(s.idx[a] - 1);
    Rational set_power = pow_int(s.mag[a], p);
    for (std::size_t b = a + 1; b <= t; ++b) {
      if (b > a + 1 && companions.insert(s.mag[b - 1]))
        set_power = pow_int(s.mag[a] + companions.sum(), p);
      Rational candidate = set_power + f[b];
      if (candidate > best) best = std::move(candidate);
    }
    f[a] = std::move(best);
  }
  return f;
}

// Orders sets (sorted element lists) by minimum, then size, then elements.
bool set_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.front() != b.front()) return a.front() < b.front();
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Orders families set-by-set, shorter prefix first.
bool family_less(const std::vector<std::vector<std::uint32_t>>& a,
                 const std::vector<std::vector<std::uint32_t>>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return set_less(a[i], b[i]);
  return a.size() < b.size();
}

// Window elements ordered by magnitude descending, position ascending, so a
// prefix of length k is the canonical choice of k companions.
struct RankedCompare {
  bool operator()(const std::pair<Rational, std::size_t>& x,
                  const std::pair<Rational, std::size_t>& y) const {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  }
};
using RankedWindow = std::set<std::pair<Rational, std::size_t>, RankedCompare>;

std::vector<std::uint32_t> canonical_set(const SupportData& s, std::size_t a,
                                         const RankedWindow& ranked,
                                         std::size_t capacity) {
  std::vector<std::uint32_t> out;
  out.push_back(s.idx[a]);
  std::size_t taken = 0;
  for (const auto& entry : ranked) {
    if (taken == capacity) break;
    out.push_back(s.idx[entry.second]);
    ++taken;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Walks the score table front to back and emits the lexicographically
// smallest maximizing family. A position is skipped only when no set rooted
// there reaches the optimum; otherwise the smallest candidate set wins, and
// among windows producing the same set the earliest resume point wins (it
// leaves the most room for the remaining sets).
AdmissiblePartition reconstruct(const SupportData& s, const std::vector<Rational>& f,
                                unsigned p) {
  const std::size_t t = s.size();
  std::vector<IndexSet> sets;
  std::size_t a = 0;
  while (a < t && f[a] != 0) {
    std::optional<std::vector<std::uint32_t>> chosen;
    std::size_t resume = a + 1;
    const std::size_t capacity = s.idx[a] - 1;
    TopSum companions(capacity);
    RankedWindow ranked;
    Rational set_power = pow_int(s.mag[a], p);
    for (std::size_t b = a + 1; b <= t; ++b) {
      if (b > a + 1) {
        ranked.insert({s.mag[b - 1], b - 1});
        if (companions.insert(s.mag[b - 1]))
          set_power = pow_int(s.mag[a] + companions.sum(), p);
      }
      if (set_power + f[b] == f[a]) {
        std::vector<std::uint32_t> candidate = canonical_set(s, a, ranked, capacity);
        if (!chosen || set_less(candidate, *chosen)) {
          chosen = std::move(candidate);
          resume = b;
        }
      }
    }
    if (chosen) {
      sets.emplace_back(std::move(*chosen));
      a = resume;
    } else {
      assert(f[a] == f[a + 1]);
      ++a;
    }
  }
  return AdmissiblePartition{std::move(sets)};
}

NormResult package(Rational p_power, AdmissiblePartition certificate, unsigned p,
                   int digits) {
  std::string decimal = root_decimal_string(p_power, p, digits);
  return NormResult{std::move(p_power), std::move(certificate), std::move(decimal)};
}

// Exhaustive enumeration used by the brute-force oracle: every successive
// admissible family with sets drawn from the support, tracked together with
// the lexicographically smallest maximizer.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const SupportData& s, unsigned p) : s_(s), p_(p) {}

  void run() {
    current_.clear();
    recurse(0, Rational(0));
  }

  const Rational& best_value() const { return best_value_; }
  const std::vector<std::vector<std::uint32_t>>& best_family() const {
    return best_family_;
  }

 private:
  void consider_current(const Rational& total) {
    if (total < best_value_) return;
    if (total > best_value_ || best_family_.empty() ||
        family_less(current_, best_family_)) {
      if (total > best_value_) best_value_ = total;
      best_family_ = current_;
    }
  }

  // Extends the family with every admissible set whose positions lie in
  // [start, t); also accounts for the family ending here.
  void recurse(std::size_t start, const Rational& total) {
    consider_current(total);
    const std::size_t t = s_.size();
    for (std::size_t m = start; m < t; ++m) {
      const std::size_t capacity =
          std::min<std::size_t>(s_.idx[m] - 1, t - m - 1);
      std::vector<std::size_t> companions;
      extend_set(m, m + 1, capacity, total, companions);
    }
  }

  // Builds companion choices for the set rooted at position m; `companions`
  // holds the positions picked so far (all > m, increasing).
  void extend_set(std::size_t m, std::size_t next, std::size_t remaining,
                  const Rational& total, std::vector<std::size_t>& companions) {
    // Close the set as it stands.
    Rational score = s_.mag[m];
    std::vector<std::uint32_t> set_elems{s_.idx[m]};
    for (std::size_t pos : companions) {
      score += s_.mag[pos];
      set_elems.push_back(s_.idx[pos]);
    }
    const std::size_t after = companions.empty() ? m + 1 : companions.back() + 1;
    current_.push_back(std::move(set_elems));
    recurse(after, total + pow_int(score, p_));
    current_.pop_back();

    if (remaining == 0) return;
    for (std::size_t c = next; c < s_.size(); ++c) {
      companions.push_back(c);
      extend_set(m, c + 1, remaining - 1, total, companions);
      companions.pop_back();
    }
  }

  const SupportData& s_;
  unsigned p_;
  Rational best_value_{0};
  std::vector<std::vector<std::uint32_t>> best_family_;
  std::vector<std::vector<std::uint32_t>> current_;
};

AdmissiblePartition to_partition(const std::vector<std::vector<std::uint32_t>>& sets) {
  AdmissiblePartition out;
  out.sets.reserve(sets.size());
  for (const auto& elems : sets) out.sets.emplace_back(elems);
  return out;
}

}  // namespace

Rational partition_power_sum(const SparseVector& x, const AdmissiblePartition& family,
                             unsigned p) {
  require_exact_exponent(p);
  validate_partition(family);
  Rational total(0);
  for (const IndexSet& set : family.sets) total += pow_int(abs_sum(x, set), p);
  return total;
}

NormResult baernstein_norm(const SparseVector& x, unsigned p, int digits) {
  require_exact_exponent(p);
  if (x.is_zero()) return package(Rational(0), AdmissiblePartition{}, p, digits);
  const SupportData s = support_data(x);
  const std::vector<Rational> f = score_table(s, p);
  AdmissiblePartition certificate = reconstruct(s, f, p);
  return package(f[0], std::move(certificate), p, digits);
}

NormResult baernstein_norm_brute_force(const SparseVector& x, unsigned p,
                                       std::uint32_t support_cap, int digits) {
  require_exact_exponent(p);
  if (x.max_index() > support_cap)
    throw std::domain_error("brute-force search refuses supports past index " +
                            std::to_string(support_cap));
  if (x.is_zero()) return package(Rational(0), AdmissiblePartition{}, p, digits);
  const SupportData s = support_data(x);
  ExhaustiveSearch search(s, p);
  search.run();
  return package(search.best_value(), to_partition(search.best_family()), p, digits);
}

ApproxNormResult baernstein_norm_approx(const SparseVector& x, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("float mode requires p > 1");
  if (x.is_zero()) return ApproxNormResult{0.0, AdmissiblePartition{}};

  const std::size_t t = x.support_size();
  std::vector<std::uint32_t> idx(t);
  std::vector<double> mag(t);
  for (std::size_t i = 0; i < t; ++i) {
    idx[i] = x.entries()[i].index;
    mag[i] = std::fabs(static_cast<double>(x.entries()[i].value));
  }

  // Same window recursion as the exact engine, in double precision.
  std::vector<double> f(t + 1, 0.0);
  for (std::size_t a = t; a-- > 0;) {
    double best = f[a + 1];
    const std::size_t capacity = idx[a] - 1;
    std::multiset<double> kept;
    double top = 0.0;
    double set_power = std::pow(mag[a], p);
    for (std::size_t b = a + 1; b <= t; ++b) {
      if (b > a + 1 && capacity > 0) {
        const double v = mag[b - 1];
        if (kept.size() < capacity) {
          kept.insert(v);
          top += v;
          set_power = std::pow(mag[a] + top, p);
        } else if (v > *kept.begin()) {
          top += v - *kept.begin();
          kept.erase(kept.begin());
          kept.insert(v);
          set_power = std::pow(mag[a] + top, p);
        }
      }
      best = std::max(best, set_power + f[b]);
    }
    f[a] = best;
  }

  const double rel_tol = 1e-9;
  auto close = [rel_tol](double u, double v) {
    return std::fabs(u - v) <= rel_tol * std::max({1.0, std::fabs(u), std::fabs(v)});
  };

  // Greedy certificate walk: earliest position, then earliest window that
  // meets the optimum within tolerance.
  std::vector<IndexSet> sets;
  std::size_t a = 0;
  while (a < t && f[a] > 0.0) {
    bool emitted = false;
    const std::size_t capacity = idx[a] - 1;
    std::multiset<double> kept;
    double top = 0.0;
    double set_power = std::pow(mag[a], p);
    RankedWindow ranked;  // reuse exact-mode ordering via Rational magnitudes
    for (std::size_t b = a + 1; b <= t && !emitted; ++b) {
      if (b > a + 1) {
        ranked.insert({abs_value(x.entries()[b - 1].value), b - 1});
        if (capacity > 0) {
          const double v = mag[b - 1];
          if (kept.size() < capacity) {
            kept.insert(v);
            top += v;
            set_power = std::pow(mag[a] + top, p);
          } else if (v > *kept.begin()) {
            top += v - *kept.begin();
            kept.erase(kept.begin());
            kept.insert(v);
            set_power = std::pow(mag[a] + top, p);
          }
        }
      }
      if (close(set_power + f[b], f[a])) {
        std::vector<std::uint32_t> elems{idx[a]};
        std::size_t taken = 0;
        for (const auto& entry : ranked) {
          if (taken == capacity) break;
          elems.push_back(idx[entry.second]);
          ++taken;
        }
        std::sort(elems.begin(), elems.end());
        sets.emplace_back(std::move(elems));
        a = b;
        emitted = true;
      }
    }
    if (!emitted) ++a;
  }
  return ApproxNormResult{std::pow(f[0], 1.0 / p), AdmissiblePartition{std::move(sets)}};
}

Rational inverse_power_sum(int q, int r, unsigned p) {
  if (q < 1 || q > r) throw std::domain_error("need 1 <= q <= r");
  Rational total(0);
  for (int n = q; n <= r; ++n) total += pow_int(Rational(1, n), p);
  return total;
}

Rational harmonic_sum(int q, int r) {
  if (q < 1 || q > r) throw std::domain_error("need 1 <= q <= r");
  Rational total(0);
  for (int n = q; n <= r; ++n) total += Rational(1, n);
  return total;
}

}  // namespace snorm
