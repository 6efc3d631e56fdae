#include <random>

#include "doctest.h"
#include "hilbrad/error.hpp"
#include "hilbrad/monomial.hpp"
#include "support.hpp"

using namespace hilbrad;

TEST_CASE("monomial strings round-trip") {
  for (const char* text : {"1", "x0", "x0^2*x1", "x1^2*x2*x3^2", "x4^7"}) {
    auto m = parse_monomial(text, 4);
    CHECK(m.to_string() == text);
  }
  CHECK(parse_monomial("x1*x0", 2).to_string() == "x0*x1");
  CHECK(parse_monomial("x0*x0^2", 2).to_string() == "x0^3");
}

TEST_CASE("monomial parse errors carry a column") {
  try {
    parse_monomial("x0*y1", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_monomial("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_monomial("x0^", 2), ParseError);
  CHECK_THROWS_AS(parse_monomial("", 2), ParseError);
}

TEST_CASE("degree, max variable and elementary moves") {
  Monomial m{1, 2, 0, 1};
  CHECK(m.degree() == 4);
  CHECK(m.max_variable() == 3);
  CHECK(Monomial::one(3).max_variable() == -1);
  CHECK(elementary_move(m, 3) == Monomial({1, 2, 1, 0}));
  CHECK(elementary_move(m, 1) == Monomial({2, 1, 0, 1}));
  CHECK_THROWS(elementary_move(m, 0));
  CHECK_THROWS(elementary_move(m, 2));
  CHECK(expansions(Monomial{0, 1, 0}) ==
        std::vector<Monomial>{Monomial{1, 1, 0}, Monomial{0, 2, 0}, Monomial{0, 1, 1}});
}

TEST_CASE("lex order on monomials") {
  auto all = monomials_of_degree(2, 2);
  REQUIRE(all.size() == 6);
  CHECK(all.front().to_string() == "x0^2");
  CHECK(all[1].to_string() == "x0*x1");
  CHECK(all.back().to_string() == "x2^2");
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(lex_compare(all[i - 1], all[i]) == std::strong_ordering::greater);
}

TEST_CASE("count of monomials of degree d is C(d+n, n)") {
  CHECK(monomials_of_degree(3, 4).size() == 35);
  CHECK(monomials_of_degree(5, 6).size() == 462);
  CHECK(monomials_of_degree(0, 9).size() == 1);
}

TEST_CASE("divisibility is a partial order compatible with gcd") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    auto a = testing::random_monomial(rng, 3, 4);
    auto b = testing::random_monomial(rng, 3, 4);
    auto c = testing::random_monomial(rng, 3, 4);
    CHECK(divides(a, a));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
    auto g = gcd(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    if (divides(a, b)) CHECK(g == a);
    if (divides(a, b)) CHECK(a.degree() <= b.degree());
  }
  CHECK_THROWS_AS(divides(Monomial::one(2), Monomial::one(3)), std::invalid_argument);
}
