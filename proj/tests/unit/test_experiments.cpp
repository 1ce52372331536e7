#include <doctest.h>

#include <snorm/baernstein.hpp>
#include <snorm/experiments.hpp>

#include <stdexcept>

using namespace snorm;

TEST_SUITE("experiments") {

TEST_CASE("growth rows carry the frozen exact values") {
  GrowthOptions options;
  options.q_min = 3;
  options.q_max = 4;
  const GrowthTable table = growth_table(options);
  CHECK(table.complete);
  REQUIRE_EQ(table.rows.size(), 2);

  const GrowthRow& q3 = table.rows[0];
  CHECK_EQ(q3.q, 3);
  CHECK_EQ(q3.image_norm, Rational(19, 20));
  CHECK_EQ(q3.vector_norm_power, Rational(869, 3600));
  CHECK_EQ(q3.ratio_power, Rational(3249, 869));
  CHECK_EQ(q3.ratio_decimal, "1.933592564925");

  const GrowthRow& q4 = table.rows[1];
  CHECK_EQ(q4.q, 4);
  CHECK_EQ(q4.image_norm, Rational(743, 840));
  CHECK_EQ(q4.vector_norm_power, Rational(117349, 705600));
  CHECK_EQ(q4.ratio_decimal, "2.168947886085");

  // Column monotonicity: shrinking vector norms, growing ratios.
  CHECK(q4.vector_norm_power < q3.vector_norm_power);
  CHECK(q4.ratio_power > q3.ratio_power);
}

TEST_CASE("growth rows match the closed forms at p = 3") {
  GrowthOptions options;
  options.p = 3;
  options.q_min = 3;
  options.q_max = 3;
  const GrowthTable table = growth_table(options);
  REQUIRE_EQ(table.rows.size(), 1);
  CHECK_EQ(table.rows[0].image_norm, harmonic_sum(3, 6));
  CHECK_EQ(table.rows[0].vector_norm_power, Rational(1567, 24000));
  CHECK_EQ(table.rows[0].vector_norm_power, inverse_power_sum(3, 6, 3));
  CHECK_EQ(table.rows[0].vector_norm_decimal, "0.402673069184");
}

TEST_CASE("range and mode validation") {
  GrowthOptions bad;
  bad.q_min = 2;
  CHECK_THROWS_AS(growth_table(bad), std::invalid_argument);

  GrowthOptions inverted;
  inverted.q_min = 5;
  inverted.q_max = 4;
  CHECK_THROWS_AS(growth_table(inverted), std::invalid_argument);

  GrowthOptions too_small_p;
  too_small_p.p = 1;
  CHECK_THROWS_AS(growth_table(too_small_p), std::invalid_argument);

  GrowthOptions needs_large;
  needs_large.q_max = 7;
  CHECK_THROWS_WITH_AS(growth_table(needs_large), doctest::Contains("large"),
                       std::invalid_argument);

  GrowthOptions out_of_range;
  out_of_range.q_max = 9;
  out_of_range.large = true;
  CHECK_THROWS_AS(growth_table(out_of_range), std::invalid_argument);
}

TEST_CASE("an exhausted budget truncates the table but keeps emitted rows") {
  GrowthOptions options;
  options.q_min = 3;
  options.q_max = 5;
  options.budget_seconds = 1e-9;
  const GrowthTable table = growth_table(options);
  CHECK_FALSE(table.complete);
  REQUIRE_GE(table.rows.size(), 1);       // the budget is only checked between rows
  CHECK_LT(table.rows.size(), 3);
  CHECK_EQ(table.rows[0].image_norm, Rational(19, 20));

  // A generous budget and large mode both leave the same range complete.
  GrowthOptions large = options;
  large.large = true;
  const GrowthTable unbudgeted = growth_table(large);
  CHECK(unbudgeted.complete);
  CHECK_EQ(unbudgeted.rows.size(), 3);
}

}  // TEST_SUITE
