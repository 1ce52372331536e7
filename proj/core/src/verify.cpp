#include "snorm/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

#include "snorm/baernstein.hpp"
#include "snorm/operators.hpp"
#include "snorm/rng.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"
#include "snorm/tsirelson.hpp"

namespace snorm {

std::string SuiteReport::summary() const {
  return suite + ": " + std::to_string(passed) + "/" + std::to_string(total) +
         (ok() ? " pass" : " FAIL");
}

namespace {

constexpr unsigned kExponents[] = {2, 3};
constexpr std::size_t kMaxRecordedFailures = 20;

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  // Failure descriptions are built lazily; most suites run many thousands of
  // cases and only failing ones justify string work.
  template <typename NameFn, typename DetailFn>
  void tally(bool ok, NameFn&& name, DetailFn&& detail) {
    ++report_.total;
    if (ok) {
      ++report_.passed;
      return;
    }
    if (report_.failures.size() < kMaxRecordedFailures)
      report_.failures.push_back({name(), detail()});
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

// ---------------------------------------------------------------- uep -----

// Visits every admissible subset of [1, max_element] exactly once.
template <typename Fn>
void enumerate_admissible(std::uint32_t max_element, Fn&& fn) {
  std::vector<std::uint32_t> elems;
  // Companion chooser: the set currently in `elems` is itself a case, and can
  // grow by any element past `next` while admissibility allows.
  std::function<void(std::uint32_t, std::uint32_t)> grow =
      [&](std::uint32_t next, std::uint32_t remaining) {
        fn(elems);
        if (remaining == 0) return;
        for (std::uint32_t j = next; j <= max_element; ++j) {
          elems.push_back(j);
          grow(j + 1, remaining - 1);
          elems.pop_back();
        }
      };
  for (std::uint32_t m = 1; m <= max_element; ++m) {
    elems.assign(1, m);
    grow(m + 1, std::min(m - 1, max_element - m));
  }
}

bool uep_case_ok(const std::vector<std::uint32_t>& elems) {
  const IndexSet n(elems);
  return is_admissible(upper_endpoints(n));
}

SuiteReport suite_uep(const VerifyOptions& options) {
  Recorder rec("uep");
  enumerate_admissible(options.uep_exhaustive_max, [&](const std::vector<std::uint32_t>& elems) {
    rec.tally(
        uep_case_ok(elems), [&] { return IndexSet(elems).to_string(); },
        [&] { return "upper endpoints fail admissibility"; });
  });
  SplitMix64 gen(options.seed);
  for (std::size_t i = 0; i < options.uep_random_count; ++i) {
    const IndexSet n = random_admissible_set(gen, options.uep_random_max);
    rec.tally(
        is_admissible(upper_endpoints(n)), [&] { return n.to_string(); },
        [&] { return "upper endpoints fail admissibility"; });
  }
  return rec.take();
}

// ---------------------------------------------------------- calclemma -----

SuiteReport suite_calclemma(const VerifyOptions& options) {
  Recorder rec("calclemma");
  SplitMix64 gen(options.seed);
  for (std::size_t i = 0; i < options.calclemma_count; ++i) {
    const Rational c = random_nonzero_rational(gen, 1, 9, 9);
    const Rational a = c + random_nonzero_rational(gen, 1, 9, 9);
    const Rational b = random_nonzero_rational(gen, 1, 9, 9);
    bool ok = true;
    for (unsigned p : kExponents)
      ok = ok && pow_int(a, p) + pow_int(b + c, p) < pow_int(a + b, p) + pow_int(c, p);
    rec.tally(
        ok,
        [&] { return "case " + std::to_string(i); },
        [&] {
          return "a=" + fraction_string(a) + " b=" + fraction_string(b) +
                 " c=" + fraction_string(c) + ": shift inequality not strict";
        });
  }
  return rec.take();
}

// --------------------------------------------------------------- bng4 -----

// Random tuple for blocks 1..count; nonzero entries rescaled to unit
// coordinate sum, which keeps every block norm at most 1.
std::vector<SparseVector> random_normalized_tuple(SplitMix64& gen, int count) {
  std::vector<SparseVector> xs;
  xs.reserve(count);
  for (int n = 1; n <= count; ++n) {
    SparseVector v = random_block_vector(gen, n);
    if (!v.is_zero()) v = v.scaled(Rational(1) / l1_norm(v));
    xs.push_back(std::move(v));
  }
  return xs;
}

SuiteReport suite_bng4(const VerifyOptions& options) {
  Recorder rec("bng4");
  SplitMix64 gen(options.seed);
  for (std::size_t i = 0; i < options.bng4_count; ++i) {
    const int blocks = static_cast<int>(gen.range(3, 4));
    const std::vector<SparseVector> xs = random_normalized_tuple(gen, blocks);
    const std::uint32_t span = block_upper(blocks + 1);
    const SparseVector y = random_vector(gen, span);
    const IndexSet n = random_admissible_set(gen, span);
    bool normalized = true;
    for (const SparseVector& x : xs)
      for (unsigned p : kExponents)
        normalized = normalized && baernstein_norm(x, p).p_power <= 1;
    const bool ok = normalized && mu_domination_holds(xs, y, n);
    rec.tally(
        ok, [&] { return "case " + std::to_string(i); },
        [&] {
          return normalized ? "domination fails on " + n.to_string()
                            : "tuple normalization fails";
        });
  }
  return rec.take();
}

// ------------------------------------------------------- delta-bounds -----

std::vector<SparseVector> random_tuple_some_nonzero(SplitMix64& gen, int count) {
  while (true) {
    std::vector<SparseVector> xs;
    xs.reserve(count);
    bool any = false;
    for (int n = 1; n <= count; ++n) {
      xs.push_back(random_block_vector(gen, n));
      any = any || !xs.back().is_zero();
    }
    if (any) return xs;
  }
}

SuiteReport suite_delta_bounds(const VerifyOptions& options) {
  Recorder rec("delta-bounds");
  SplitMix64 gen(options.seed);

  for (std::size_t i = 0; i < options.delta_lower_count; ++i) {
    const int blocks = static_cast<int>(gen.range(2, 4));
    const std::vector<SparseVector> xs = random_tuple_some_nonzero(gen, blocks);
    const FiniteRankOperator op = embed_block_tuple(xs);
    bool ok = true;
    for (int k = 1; k <= blocks; ++k) {
      if (xs[k - 1].is_zero()) continue;
      const SparseVector image = op.apply(unit_vector(block_upper(k)));
      for (unsigned p : kExponents)
        ok = ok && baernstein_norm(image, p).p_power ==
                       baernstein_norm(xs[k - 1], p).p_power;
    }
    rec.tally(
        ok, [&] { return "lower case " + std::to_string(i); },
        [&] { return "probe at a block endpoint does not reproduce the block norm"; });
  }

  for (std::size_t i = 0; i < options.delta_upper_count; ++i) {
    const int blocks = static_cast<int>(gen.range(2, 4));
    const std::vector<SparseVector> xs = random_tuple_some_nonzero(gen, blocks);
    const FiniteRankOperator op = embed_block_tuple(xs);
    const SparseVector y = random_vector(gen, block_upper(blocks + 1));
    bool ok = true;
    for (unsigned p : kExponents) {
      Rational max_term(0);
      for (const SparseVector& x : xs)
        max_term = std::max(max_term, baernstein_norm(x, p).p_power);
      const Rational lhs = baernstein_norm(op.apply(y), p).p_power;
      const Rational rhs = 3 * max_term * baernstein_norm(y, p).p_power;
      ok = ok && lhs <= rhs;
    }
    rec.tally(
        ok, [&] { return "upper case " + std::to_string(i); },
        [&] { return "embedded image exceeds 3 * max block norm^p * input norm^p"; });
  }
  return rec.take();
}

// ------------------------------------------------------------- oracle -----

SuiteReport suite_oracle(const VerifyOptions& options) {
  Recorder rec("oracle");
  SplitMix64 gen(options.seed);
  for (std::size_t i = 0; i < options.oracle_count; ++i) {
    const SparseVector x = random_vector(gen, 10);
    bool ok = true;
    std::string why;
    for (unsigned p : kExponents) {
      const NormResult dp = baernstein_norm(x, p);
      const NormResult brute = baernstein_norm_brute_force(x, p);
      if (dp.p_power != brute.p_power) {
        ok = false;
        why = "values differ at p=" + std::to_string(p) + ": " +
              fraction_string(dp.p_power) + " vs " + fraction_string(brute.p_power);
        break;
      }
      if (dp.certificate != brute.certificate) {
        ok = false;
        why = "certificates differ at p=" + std::to_string(p);
        break;
      }
      if (partition_power_sum(x, dp.certificate, p) != dp.p_power) {
        ok = false;
        why = "certificate does not replay at p=" + std::to_string(p);
        break;
      }
    }
    rec.tally(
        ok, [&] { return "case " + std::to_string(i) + " on " + x.to_string(); },
        [&] { return why; });
  }
  return rec.take();
}

// ----------------------------------------------------------- sandwich -----

SuiteReport suite_sandwich(const VerifyOptions& options) {
  Recorder rec("sandwich");
  const std::vector<std::vector<SparseVector>> instances =
      sandwich_instances(options.seed, options.sandwich_count);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const SandwichReport report = block_sandwich(instances[i]);
    rec.tally(
        report.lower_ok && report.upper_ok,
        [&] { return "blockwise case " + std::to_string(i); },
        [&] {
          return "A=" + fraction_string(report.a_value) +
                 " B=" + fraction_string(report.b_value) + " outside [B/3, 18B]";
        });
  }
  SplitMix64 gen(options.seed + 1);  // separate stream for the l1 half
  for (std::size_t i = 0; i < options.sandwich_l1_count; ++i) {
    const SparseVector x = random_admissible_support_vector(gen, 16);
    const L1ComparisonReport report = l1_comparison(x);
    rec.tally(
        report.lower_ok && report.upper_ok,
        [&] { return "l1 case " + std::to_string(i) + " on " + x.to_string(); },
        [&] {
          return "norm=" + fraction_string(report.norm_value) +
                 " l1=" + fraction_string(report.l1_value) + " outside [l1/2, l1]";
        });
  }
  return rec.take();
}

// ---------------------------------------------------------- l1-blocks -----

SuiteReport suite_l1_blocks(const VerifyOptions& options) {
  Recorder rec("l1-blocks");
  SplitMix64 gen(options.seed);
  for (std::size_t i = 0; i < options.l1_count; ++i) {
    const SparseVector x = random_admissible_support_vector(gen, 32);
    const Rational l1 = l1_norm(x);
    bool ok = true;
    for (unsigned p : kExponents)
      ok = ok && baernstein_norm(x, p).p_power == pow_int(l1, p);
    rec.tally(
        ok, [&] { return "case " + std::to_string(i) + " on " + x.to_string(); },
        [&] { return "block norm differs from the coordinate sum"; });
  }
  return rec.take();
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"uep", suite_uep},
      {"calclemma", suite_calclemma},
      {"bng4", suite_bng4},
      {"delta-bounds", suite_delta_bounds},
      {"oracle", suite_oracle},
      {"sandwich", suite_sandwich},
      {"l1-blocks", suite_l1_blocks},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& available_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry())
    if (suite == name) return fn(options);
  std::string known;
  for (const std::string& suite : available_suites()) {
    if (!known.empty()) known += ", ";
    known += suite;
  }
  throw std::invalid_argument("unknown suite \"" + name + "\"; available: " + known);
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& options) {
  std::vector<SuiteReport> reports;
  reports.reserve(registry().size());
  for (const auto& [name, fn] : registry()) reports.push_back(fn(options));
  return reports;
}

std::vector<std::vector<SparseVector>> sandwich_instances(std::uint64_t seed,
                                                          std::size_t count) {
  SplitMix64 gen(seed);
  const std::array<Rational, 5> palette = {Rational(0), Rational(1), Rational(-1),
                                           Rational(1, 2), Rational(-1, 2)};
  std::vector<std::vector<SparseVector>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<SparseVector> xs;
    bool any = false;
    while (!any) {
      xs.clear();
      const int blocks = static_cast<int>(gen.range(2, 4));
      for (int n = 1; n <= blocks; ++n) {
        std::vector<SparseVector::Entry> entries;
        for (std::uint32_t j = block_lower(n); j <= block_upper(n); ++j) {
          const Rational& v = palette[gen.below(palette.size())];
          if (v != 0) entries.push_back({j, v});
        }
        xs.emplace_back(std::move(entries));
        any = any || !xs.back().is_zero();
      }
    }
    out.push_back(std::move(xs));
  }
  return out;
}

}  // namespace snorm
