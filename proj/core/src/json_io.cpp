#include "snorm/json_io.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace snorm {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

// Re-raises nlohmann parse errors with a line/column position computed from
// the byte offset, which the library does not report directly.
Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail("JSON parse error at line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + e.what());
  }
}

std::uint32_t as_index(const Json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() < 1 ||
      j.get<std::uint64_t>() > 0xFFFFFFFFull)
    fail(std::string(what) + " must be a positive integer");
  return static_cast<std::uint32_t>(j.get<std::uint64_t>());
}

Rational as_rational(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a rational string");
  return parse_rational(j.get<std::string>());
}

Json vector_to_value(const SparseVector& x) {
  Json entries = Json::array();
  for (const SparseVector::Entry& e : x.entries())
    entries.push_back(Json::array({e.index, fraction_string(e.value)}));
  return Json{{"entries", std::move(entries)}};
}

SparseVector vector_from_value(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    fail("vector must be an object with an \"entries\" array");
  std::vector<SparseVector::Entry> entries;
  std::uint32_t last = 0;
  for (const Json& pair : j["entries"]) {
    if (!pair.is_array() || pair.size() != 2)
      fail("each entry must be an [index, value] pair");
    const std::uint32_t index = as_index(pair[0], "entry index");
    if (index <= last) fail("entry indices must be strictly increasing");
    last = index;
    Rational value = as_rational(pair[1], "entry value");
    if (value != 0) entries.push_back({index, std::move(value)});
  }
  return SparseVector(std::move(entries));
}

Json index_set_to_value(const IndexSet& s) {
  Json out = Json::array();
  for (std::uint32_t j : s) out.push_back(j);
  return out;
}

Json partition_to_value(const AdmissiblePartition& family) {
  Json out = Json::array();
  for (const IndexSet& s : family.sets) out.push_back(index_set_to_value(s));
  return out;
}

}  // namespace

std::string vector_to_json(const SparseVector& x) { return vector_to_value(x).dump(); }

SparseVector vector_from_json(const std::string& text) {
  return vector_from_value(parse_document(text));
}

std::string index_set_to_json(const IndexSet& s) { return index_set_to_value(s).dump(); }

std::string partition_to_json(const AdmissiblePartition& family) {
  return partition_to_value(family).dump();
}

std::string norm_result_to_json(const NormResult& result) {
  Json out{{"p_power", fraction_string(result.p_power)},
           {"decimal", result.decimal},
           {"certificate", partition_to_value(result.certificate)}};
  return out.dump();
}

std::string operator_to_json(const FiniteRankOperator& op) {
  Json terms = Json::array();
  for (const RankOneTerm& t : op.terms())
    terms.push_back(Json{{"vector", vector_to_value(t.vector)},
                         {"functional", t.functional}});
  return Json{{"terms", std::move(terms)}}.dump();
}

FiniteRankOperator operator_from_json(const std::string& text) {
  const Json j = parse_document(text);
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail("operator must be an object with a \"terms\" array");
  std::vector<RankOneTerm> terms;
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("vector") || !t.contains("functional"))
      fail("each term needs \"vector\" and \"functional\"");
    terms.push_back(
        {vector_from_value(t["vector"]), as_index(t["functional"], "functional")});
  }
  return FiniteRankOperator(std::move(terms));
}

std::string block_diagonal_to_json(const BlockDiagonalOperator& op) {
  Json blocks = Json::array();
  for (const BlockOperator& b : op.blocks()) {
    const std::uint32_t lo = block_lower(b.block);
    const std::size_t dim = block_upper(b.block) - lo + 1;
    std::vector<std::vector<Rational>> dense(dim, std::vector<Rational>(dim, Rational(0)));
    for (const BlockMatrixEntry& e : b.entries) dense[e.row - lo][e.col - lo] += e.value;
    Json matrix = Json::array();
    for (const auto& row : dense) {
      Json out_row = Json::array();
      for (const Rational& v : row) out_row.push_back(fraction_string(v));
      matrix.push_back(std::move(out_row));
    }
    blocks.push_back(Json{{"block", b.block}, {"matrix", std::move(matrix)}});
  }
  return Json{{"blocks", std::move(blocks)},
              {"tail", op.tail() == TailPolicy::kIdentity ? "identity" : "zero"}}
      .dump();
}

BlockDiagonalOperator block_diagonal_from_json(const std::string& text) {
  const Json j = parse_document(text);
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    fail("diagonal must be an object with a \"blocks\" array");
  std::vector<BlockOperator> blocks;
  for (const Json& b : j["blocks"]) {
    if (!b.is_object() || !b.contains("block") || !b.contains("matrix"))
      fail("each block needs \"block\" and \"matrix\"");
    if (!b["block"].is_number_unsigned() || b["block"].get<std::uint64_t>() < 1 ||
        b["block"].get<std::uint64_t>() > 31)
      fail("block number out of range");
    const int block = static_cast<int>(b["block"].get<std::uint64_t>());
    const std::uint32_t lo = block_lower(block);
    const std::size_t dim = block_upper(block) - lo + 1;
    if (!b["matrix"].is_array() || b["matrix"].size() != dim)
      fail("matrix for block " + std::to_string(block) + " must have " +
           std::to_string(dim) + " rows");
    BlockOperator out{block, {}};
    for (std::size_t r = 0; r < dim; ++r) {
      const Json& row = b["matrix"][r];
      if (!row.is_array() || row.size() != dim)
        fail("matrix for block " + std::to_string(block) + " must have " +
             std::to_string(dim) + " columns per row");
      for (std::size_t c = 0; c < dim; ++c) {
        Rational value = as_rational(row[c], "matrix entry");
        if (value != 0)
          out.entries.push_back({static_cast<std::uint32_t>(lo + r),
                                 static_cast<std::uint32_t>(lo + c), std::move(value)});
      }
    }
    blocks.push_back(std::move(out));
  }
  TailPolicy tail = TailPolicy::kZero;
  if (j.contains("tail")) {
    if (!j["tail"].is_string()) fail("tail must be \"identity\" or \"zero\"");
    const std::string t = j["tail"].get<std::string>();
    if (t == "identity")
      tail = TailPolicy::kIdentity;
    else if (t == "zero")
      tail = TailPolicy::kZero;
    else
      fail("tail must be \"identity\" or \"zero\"");
  }
  return BlockDiagonalOperator(std::move(blocks), tail);
}

std::string sandwich_report_to_json(const SandwichReport& report) {
  Json out{{"A", fraction_string(report.a_value)},
           {"B", fraction_string(report.b_value)},
           {"ratio", fraction_string(report.ratio)},
           {"lower_ok", report.lower_ok},
           {"upper_ok", report.upper_ok}};
  return out.dump();
}

}  // namespace snorm
