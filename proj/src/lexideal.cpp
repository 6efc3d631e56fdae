#include "hilbrad/lexideal.hpp"

#include "hilbrad/error.hpp"

namespace hilbrad {

MonomialIdeal lex_ideal(std::size_t n, const HilbertPolynomial& p) {
  const auto decomposition = gotzmann_decomposition(p);
  const int d = p.degree();
  if (d >= static_cast<int>(n))
    throw DomainError("lex ideal: deg P = " + std::to_string(d) +
                      " must be at most n - 1 = " + std::to_string(n - 1));

  // Variables x0..x_{c-1} are generators; y_j = x_{c+d-j} carries the
  // multiplicity m_j of j in the decomposition.
  const std::size_t c = n - static_cast<std::size_t>(d) - 1;
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < c; ++i) gens.push_back(Monomial::variable(n, i));

  std::vector<Exponent> prefix(n + 1, 0);
  for (int j = d; j >= 0; --j) {
    const auto var = c + static_cast<std::size_t>(d - j);
    const auto m = static_cast<Exponent>(decomposition.multiplicity(j));
    auto e = prefix;
    e[var] = j > 0 ? m + 1 : m;
    gens.emplace_back(std::move(e));
    prefix[var] = m;
  }
  // With m_0 = 0 the last entry is the bare prefix, which divides its
  // predecessor; minimalize sorts that out.
  auto ideal = minimalize(gens, n);
  if (ideal.is_unit()) throw DomainError("lex ideal: construction gives the unit ideal");
  return ideal;
}

MonomialIdeal lex_truncation_oracle(std::size_t n, const HilbertPolynomial& p) {
  const auto r = static_cast<unsigned>(gotzmann_number(p));
  auto monomials = monomials_of_degree(n, r);
  const Integer total = monomials.size();
  const Integer value = p.at(r);
  if (value < 0 || value > total)
    throw DomainError("lex oracle: P(" + std::to_string(r) + ") = " + value.str() +
                      " is outside [0, " + total.str() + "]");
  const auto take = static_cast<std::size_t>(total - value);
  monomials.erase(monomials.begin() + static_cast<std::ptrdiff_t>(take), monomials.end());
  return saturate_last(minimalize(monomials, n));
}

}  // namespace hilbrad
