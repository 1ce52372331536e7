#include <doctest.h>

#include <snorm/baernstein.hpp>
#include <snorm/json_io.hpp>
#include <snorm/operators.hpp>
#include <snorm/rng.hpp>
#include <snorm/schreier.hpp>
#include <snorm/sparse_vector.hpp>
#include <snorm/tsirelson.hpp>

#include <stdexcept>
#include <string>

using namespace snorm;

TEST_SUITE("json_io") {

TEST_CASE("vectors round trip") {
  const SparseVector x(
      {{4, Rational(1, 12)}, {9, Rational(-3)}, {15, Rational(7, 2)}});
  CHECK_EQ(vector_from_json(vector_to_json(x)), x);
  CHECK_EQ(vector_to_json(x),
           R"({"entries":[[4,"1/12"],[9,"-3"],[15,"7/2"]]})");
  CHECK_EQ(vector_from_json(R"({"entries":[]})"), SparseVector{});
  CHECK(vector_from_json(vector_to_json(SparseVector{})).is_zero());
  // Explicit zero entries are dropped on read.
  CHECK_EQ(vector_from_json(R"({"entries":[[3,"0"],[5,"1"]]})"), unit_vector(5));
}

TEST_CASE("vector parsing reports precise failures") {
  // Broken JSON: the diagnostic carries line and column.
  CHECK_THROWS_WITH_AS(vector_from_json("{\"entries\": [[1, \"1\"]\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  // Structurally wrong documents.
  CHECK_THROWS_AS(vector_from_json(R"([1, 2])"), std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(R"({"entries": [[0, "1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(R"({"entries": [[2, "1"], [2, "1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(R"({"entries": [[5, "1"], [3, "1"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(R"({"entries": [[1, "1/0"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(vector_from_json(R"({"entries": [[1, 0.5]]})"),
                  std::invalid_argument);
}

TEST_CASE("index sets and families serialize as plain arrays") {
  CHECK_EQ(index_set_to_json(IndexSet{3, 7, 15}), "[3,7,15]");
  CHECK_EQ(index_set_to_json(IndexSet{}), "[]");
  AdmissiblePartition family;
  family.sets = {IndexSet::interval(4, 7), IndexSet{8, 9}};
  CHECK_EQ(partition_to_json(family), "[[4,5,6,7],[8,9]]");
}

TEST_CASE("norm results serialize with power, decimal, and certificate") {
  const NormResult r = baernstein_norm(harmonic_block_sum(3, 4), 2);
  CHECK_EQ(norm_result_to_json(r),
           R"({"p_power":"25/144","decimal":"0.416666666667",)"
           R"("certificate":[[4,5,6,7],[8,9,10,11,12,13,14,15]]})");
}

TEST_CASE("finite-rank operators round trip") {
  const FiniteRankOperator op = embed_block_tuple(
      {uniform_block_vector(1), uniform_block_vector(2), uniform_block_vector(3)});
  CHECK_EQ(operator_from_json(operator_to_json(op)), op);
  CHECK_EQ(operator_from_json(R"({"terms":[]})"), FiniteRankOperator{});
  CHECK_THROWS_AS(operator_from_json(R"({"terms":[{"functional":2}]})"),
                  std::invalid_argument);
}

TEST_CASE("block-diagonal operators round trip through dense matrices") {
  const BlockDiagonalOperator diag = summation_diagonal(3);
  const std::string text = block_diagonal_to_json(diag);
  const BlockDiagonalOperator back = block_diagonal_from_json(text);
  CHECK_EQ(back.blocks().size(), diag.blocks().size());
  CHECK_EQ(back.tail(), diag.tail());
  SplitMix64 gen(41);
  for (int trial = 0; trial < 5; ++trial) {
    const SparseVector y = random_vector(gen, 15);
    CHECK_EQ(back.apply(y), diag.apply(y));
  }

  // Tail policy parses from its two spellings and defaults to zero.
  const std::string with_identity =
      R"({"blocks":[{"block":1,"matrix":[["2"]]}],"tail":"identity"})";
  CHECK_EQ(block_diagonal_from_json(with_identity).tail(), TailPolicy::kIdentity);
  const std::string no_tail = R"({"blocks":[{"block":1,"matrix":[["2"]]}]})";
  CHECK_EQ(block_diagonal_from_json(no_tail).tail(), TailPolicy::kZero);
  CHECK_EQ(block_diagonal_from_json(no_tail).apply(unit_vector(1)),
           unit_vector(1).scaled(Rational(2)));

  // A block matrix must be square with the block's dimension.
  CHECK_THROWS_AS(
      block_diagonal_from_json(
          R"({"blocks":[{"block":2,"matrix":[["1","0"]]}],"tail":"zero"})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      block_diagonal_from_json(
          R"({"blocks":[{"block":1,"matrix":[["1"]]}],"tail":"banana"})"),
      std::invalid_argument);
}

TEST_CASE("sandwich reports serialize exactly") {
  const SandwichReport report =
      block_sandwich({unit_vector(1), uniform_block_vector(2)});
  CHECK_EQ(sandwich_report_to_json(report),
           R"({"A":"1","B":"1","ratio":"1","lower_ok":true,"upper_ok":true})");
}

}  // TEST_SUITE
