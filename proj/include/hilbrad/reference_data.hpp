#pragma once

// Reference Borel-fixed ideals on the two-planes Hilbert schemes of P^4 and
// P^5, transcribed generator-for-generator from the published lists (same
// generator order). The same lists ship as files under data/reference/.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hilbrad/ideal.hpp"

namespace hilbrad::reference {

struct NamedIdeal {
  std::string_view name;        // "H4.I1", "H5.I8", ...
  std::size_t n;
  std::string_view generators;  // "(x0^2, x0*x1, ...)"

  MonomialIdeal ideal() const { return parse_ideal_list(generators, n); }
};

/// I1, I2, Ilex on the P^4 scheme.
std::span<const NamedIdeal> h4_ideals();
/// I1 (= lex), ..., I9 on the P^5 scheme.
std::span<const NamedIdeal> h5_ideals();

const NamedIdeal& find(std::string_view name);

/// Double saturation shared by the lex component points on the P^5 scheme.
MonomialIdeal h5_lex_double_saturation();
/// Saturated hyperplane section of H5.I1..I7: the lex point of the P^4 scheme.
MonomialIdeal h4_lex_section();

}  // namespace hilbrad::reference
