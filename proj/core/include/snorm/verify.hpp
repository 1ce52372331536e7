#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "snorm/sparse_vector.hpp"

namespace snorm {

// One failing case, kept for diagnostics; passing cases are only counted.
struct SuiteFailure {
  std::string case_name;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return passed == total; }
  // e.g. "calclemma: 1000/1000 pass"
  std::string summary() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;

  // uep: every admissible set with max <= exhaustive_max, plus random sets.
  std::uint32_t uep_exhaustive_max = 32;
  std::size_t uep_random_count = 10000;
  std::uint32_t uep_random_max = std::uint32_t{1} << 14;

  std::size_t oracle_count = 200;
  std::size_t calclemma_count = 1000;
  std::size_t bng4_count = 500;
  std::size_t delta_lower_count = 100;
  std::size_t delta_upper_count = 500;
  std::size_t sandwich_count = 50;
  std::size_t sandwich_l1_count = 100;
  std::size_t l1_count = 100;
};

// Suite names: uep, calclemma, bng4, delta-bounds, oracle, sandwich,
// l1-blocks.
const std::vector<std::string>& available_suites();

// Runs one suite; throws std::invalid_argument (listing the known names) for
// an unknown suite. Deterministic for a fixed seed.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

// Runs every suite in the order of available_suites().
std::vector<SuiteReport> run_all_suites(const VerifyOptions& options);

// The seeded blockwise tuples behind the sandwich suite, exposed so the
// command-line front end can replay the identical instances record by
// record. Each tuple has 2..4 summands, one per leading dyadic block, with
// coordinates from {0, +-1, +-1/2} and at least one summand nonzero.
std::vector<std::vector<SparseVector>> sandwich_instances(std::uint64_t seed,
                                                          std::size_t count);

}  // namespace snorm
