#include "doctest.h"
#include "hilbrad/lexcomp.hpp"
#include "hilbrad/lexideal.hpp"
#include "hilbrad/reference_data.hpp"

using namespace hilbrad;

TEST_CASE("lexicographic component test on the n = 5 points") {
  const auto p = two_planes_polynomial(5);
  for (const auto& named : reference::h5_ideals()) {
    CAPTURE(named.name);
    const bool expected = named.name != "H5.I8" && named.name != "H5.I9";
    auto report = lex_component_report(named.ideal(), 5, p);
    CHECK(report.in_lex_component == expected);
    CHECK(report.validated_ambient);
    CHECK(report.lex_double_saturation == reference::h5_lex_double_saturation());
    if (expected) CHECK(report.ideal_double_saturation == reference::h5_lex_double_saturation());
  }
}

TEST_CASE("the lex ideal lies on its own component") {
  for (long long n : {3, 4, 5, 6}) {
    auto p = two_planes_polynomial(n);
    auto lex = lex_ideal(static_cast<std::size_t>(n), p);
    auto report = lex_component_report(lex, static_cast<std::size_t>(n), p);
    CHECK(report.in_lex_component);
    CHECK(report.validated_ambient == (n == 4 || n == 5));
  }
}

TEST_CASE("preconditions") {
  const auto p = two_planes_polynomial(4);
  CHECK_THROWS_AS(in_lex_component(parse_ideal_list("(x1, x0^2)", 4), 4, p), NotBorelError);
  CHECK_THROWS_AS(in_lex_component(parse_ideal_list("(x0, x1)", 4), 4, p), WrongPolynomialError);
}
