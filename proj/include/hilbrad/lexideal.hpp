#pragma once

#include <cstddef>

#include "hilbrad/hilbert.hpp"
#include "hilbrad/ideal.hpp"

namespace hilbrad {

/// Saturated lexicographic ideal of k[x0..xn] with Hilbert polynomial `p`,
/// read off the Gotzmann decomposition. Requires deg p <= n - 1.
MonomialIdeal lex_ideal(std::size_t n, const HilbertPolynomial& p);

/// The same ideal built the slow way: the lex segment of the right size in
/// the Gotzmann degree, saturated. Used to cross-check `lex_ideal`.
MonomialIdeal lex_truncation_oracle(std::size_t n, const HilbertPolynomial& p);

}  // namespace hilbrad
