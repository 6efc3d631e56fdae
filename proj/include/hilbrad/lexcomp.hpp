#pragma once

#include <cstddef>

#include "hilbrad/error.hpp"
#include "hilbrad/hilbert.hpp"
#include "hilbrad/ideal.hpp"

namespace hilbrad {

/// Precondition failures of the lexicographic-component test.
class NotBorelError : public DomainError {
public:
  using DomainError::DomainError;
};
class WrongPolynomialError : public DomainError {
public:
  using DomainError::DomainError;
};

struct LexComponentReport {
  bool in_lex_component = false;
  MonomialIdeal ideal_double_saturation;
  MonomialIdeal lex_double_saturation;
  /// The criterion has only been checked against known answers for n = 4, 5.
  bool validated_ambient = false;
};

/// A Borel-fixed point lies on the lexicographic component iff its double
/// saturation (x_{n-1} = xn = 1) equals that of the lex ideal.
LexComponentReport lex_component_report(const MonomialIdeal& ideal, std::size_t n,
                                        const HilbertPolynomial& p);

bool in_lex_component(const MonomialIdeal& ideal, std::size_t n,
                      const HilbertPolynomial& p);

}  // namespace hilbrad
