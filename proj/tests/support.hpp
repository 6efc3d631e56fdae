#pragma once

#include <random>
#include <vector>

#include "hilbrad/ideal.hpp"
#include "hilbrad/monomial.hpp"

namespace hilbrad::testing {

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(n));
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Exponent> e(n + 1, 0);
  for (unsigned k = deg(rng); k > 0; --k) ++e[pick(rng)];
  return Monomial(std::move(e));
}

// Nonzero, proper ideal with 1..max_gens generators of degree 1..max_degree.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, unsigned max_degree,
                                  unsigned max_gens = 4) {
  std::uniform_int_distribution<unsigned> count(1, max_gens);
  std::vector<Monomial> gens;
  for (unsigned k = count(rng); k > 0; --k) {
    auto m = random_monomial(rng, n, max_degree);
    if (m.degree() == 0) m = Monomial::variable(n, 0);
    gens.push_back(std::move(m));
  }
  return minimalize(gens, n);
}

inline MonomialIdeal random_borel_ideal(std::mt19937& rng, std::size_t n, unsigned max_degree,
                                        unsigned max_gens = 3) {
  auto seed = random_ideal(rng, n, max_degree, max_gens);
  return minimalize(borel_closure(seed.generators()), n);
}

// Monomials of degree d outside the ideal, counted one by one.
inline long long brute_force_hf(const MonomialIdeal& ideal, unsigned d) {
  long long count = 0;
  for (const auto& m : monomials_of_degree(ideal.ambient(), d))
    if (!contains(ideal, m)) ++count;
  return count;
}

}  // namespace hilbrad::testing
