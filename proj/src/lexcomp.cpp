#include "hilbrad/lexcomp.hpp"

#include "hilbrad/lexideal.hpp"

namespace hilbrad {

LexComponentReport lex_component_report(const MonomialIdeal& ideal, std::size_t n,
                                        const HilbertPolynomial& p) {
  if (ideal.ambient() != n)
    throw std::invalid_argument("ideal lives in k[x0..x" + std::to_string(ideal.ambient()) +
                                "], expected n=" + std::to_string(n));
  if (ideal.is_unit() || !is_saturated_borel(ideal))
    throw NotBorelError("ideal " + ideal.to_string() + " is not a saturated Borel-fixed ideal");
  if (auto hp = hilbert_polynomial(ideal); hp != p)
    throw WrongPolynomialError("ideal has Hilbert polynomial " + hp.to_string() +
                               ", expected " + p.to_string());

  auto lex = lex_ideal(n, p);
  LexComponentReport report{false, double_saturate(ideal), double_saturate(lex),
                            n == 4 || n == 5};
  report.in_lex_component = report.ideal_double_saturation == report.lex_double_saturation;
  return report;
}

bool in_lex_component(const MonomialIdeal& ideal, std::size_t n, const HilbertPolynomial& p) {
  return lex_component_report(ideal, n, p).in_lex_component;
}

}  // namespace hilbrad
