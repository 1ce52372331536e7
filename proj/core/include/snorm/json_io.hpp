#pragma once

#include <string>

#include "snorm/baernstein.hpp"
#include "snorm/operators.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"
#include "snorm/tsirelson.hpp"

namespace snorm {

// JSON forms (all exact rationals rendered as "num/den", or "num" when the
// denominator is 1):
//   vector     {"entries": [[index, "num/den"], ...]}   indices increasing
//   index set  [3, 7, 15]
//   family     [[4,5,6,7], [8,9]]
//   norm       {"p_power": "...", "decimal": "...", "certificate": [...]}
//   operator   {"terms": [{"vector": {...}, "functional": i}, ...]}
//   diagonal   {"blocks": [{"block": n, "matrix": [["..."], ...]}, ...],
//               "tail": "identity" | "zero"}   dense row-major per block
//   sandwich   {"A": "...", "B": "...", "ratio": "...",
//               "lower_ok": bool, "upper_ok": bool}
// Parse failures throw std::invalid_argument with line/column context.

std::string vector_to_json(const SparseVector& x);
SparseVector vector_from_json(const std::string& text);

std::string index_set_to_json(const IndexSet& s);
std::string partition_to_json(const AdmissiblePartition& family);

std::string norm_result_to_json(const NormResult& result);

std::string operator_to_json(const FiniteRankOperator& op);
FiniteRankOperator operator_from_json(const std::string& text);

std::string block_diagonal_to_json(const BlockDiagonalOperator& op);
BlockDiagonalOperator block_diagonal_from_json(const std::string& text);

std::string sandwich_report_to_json(const SandwichReport& report);

}  // namespace snorm
