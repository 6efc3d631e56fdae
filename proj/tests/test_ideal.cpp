#include <random>

#include "doctest.h"
#include "hilbrad/error.hpp"
#include "hilbrad/ideal.hpp"
#include "support.hpp"

using namespace hilbrad;

TEST_CASE("minimal generators are kept in descending lex order") {
  auto ideal = parse_ideal_list("(x1^2, x0*x1, x0^2, x0^2*x1, x1^2*x2)", 2);
  CHECK(ideal.to_string() == "(x0^2, x0*x1, x1^2)");
  CHECK(parse_ideal_list("(0)", 3).is_zero());
  CHECK(parse_ideal_list("(x0, 1)", 3).is_unit());
  CHECK(MonomialIdeal(2).to_string() == "(0)");
}

TEST_CASE("ideal files: header, comments, blank lines") {
  auto ideal = parse_ideal("# a comment\n\nring n=3\nx0^2  # trailing\n\nx0*x1\nx1^3\n");
  CHECK(ideal.ambient() == 3);
  CHECK(ideal.to_string() == "(x0^2, x0*x1, x1^3)");
  CHECK(parse_ideal("x0\nx1^2\n", 2).ambient() == 2);
  CHECK_THROWS_AS(parse_ideal("x0\n"), ParseError);
  try {
    parse_ideal("ring n=2\nx0\nx1^a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 4);
  }
}

TEST_CASE("serialization round-trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto ideal = testing::random_ideal(rng, 3, 4);
    CHECK(parse_ideal(serialize_ideal(ideal)) == ideal);
    CHECK(parse_ideal_list(ideal.to_string(), 3) == ideal);
  }
}

TEST_CASE("membership agrees with filtering by divisibility") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto ideal = testing::random_ideal(rng, 3, 4);
    for (unsigned d = 0; d <= 5; ++d)
      for (const auto& m : monomials_of_degree(3, d)) {
        bool by_filter = false;
        for (const auto& g : ideal.generators()) by_filter = by_filter || divides(g, m);
        CHECK(contains(ideal, m) == by_filter);
      }
  }
}

TEST_CASE("minimalize is idempotent and saturation is idempotent on Borel ideals") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto ideal = testing::random_ideal(rng, 3, 4);
    CHECK(minimalize(ideal.generators(), 3) == ideal);
    auto borel = testing::random_borel_ideal(rng, 3, 4);
    auto sat = saturate_last(borel);
    CHECK(saturate_last(sat) == sat);
    CHECK(is_saturated_borel(sat));
  }
}

// Strong stability straight from the definition, over every monomial of the
// ideal up to the largest generator degree plus one.
static bool strongly_stable_brute(const MonomialIdeal& ideal) {
  const auto n = ideal.ambient();
  for (unsigned d = 0; d <= ideal.max_generator_degree() + 1; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      if (!contains(ideal, m)) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        if (m[j] == 0) continue;
        for (std::size_t i = 0; i < j; ++i) {
          auto moved = m.with_exponent(j, m[j] - 1).times_variable(i);
          if (!contains(ideal, moved)) return false;
        }
      }
    }
  return true;
}

TEST_CASE("strong stability matches the brute-force definition") {
  std::mt19937 rng(17);
  int stable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto ideal = trial % 2 ? testing::random_ideal(rng, 3, 3, 3)
                           : testing::random_borel_ideal(rng, 3, 3, 2);
    bool expected = strongly_stable_brute(ideal);
    CHECK(is_strongly_stable(ideal) == expected);
    stable += expected;
  }
  CHECK(stable >= 150);
}

TEST_CASE("colon, saturation, double saturation and sections") {
  auto ideal = parse_ideal_list("(x0^2, x0*x1, x0*x2, x0*x3, x1^3, x1^2*x2)", 4);
  CHECK(colon_by_monomial(ideal, parse_monomial("x0", 4)).to_string() == "(x0, x1, x2, x3)");
  CHECK(saturate_last(ideal) == ideal);
  CHECK(is_nonzerodivisor_last(ideal));
  CHECK(double_saturate(ideal).to_string() == "(x0, x1^3, x1^2*x2)");
  auto not_sat = parse_ideal_list("(x0, x1^2, x1*x2)", 2);
  CHECK(saturate_last(not_sat).to_string() == "(x0, x1)");
  CHECK_FALSE(is_nonzerodivisor_last(not_sat));
  CHECK(hyperplane_section_last(ideal).to_string() == "(x0^2, x0*x1, x0*x2, x0*x3, x1^3, x1^2*x2)");
  CHECK(hyperplane_section_last(ideal).ambient() == 3);
}

TEST_CASE("Borel checks on small examples") {
  CHECK(is_strongly_stable(parse_ideal_list("(x0^2, x0*x1, x1^2)", 2)));
  CHECK_FALSE(is_strongly_stable(parse_ideal_list("(x1)", 2)));
  CHECK_FALSE(is_strongly_stable(parse_ideal_list("(x0^2, x1^2)", 2)));
  CHECK(is_saturated_borel(parse_ideal_list("(x0, x1^2)", 2)));
  CHECK_FALSE(is_saturated_borel(parse_ideal_list("(x0, x1^2, x1*x2)", 2)));
}
