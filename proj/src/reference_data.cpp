#include "hilbrad/reference_data.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace hilbrad::reference {

namespace {

constexpr std::array<NamedIdeal, 3> kH4 = {{
    {"H4.I1", 4, "(x0^2, x0*x1, x0*x2, x1^2)"},
    {"H4.I2", 4, "(x0^2, x0*x1, x0*x2, x0*x3, x1^3, x1^2*x2)"},
    {"H4.Ilex", 4, "(x0, x1^3, x1^2*x2^2, x1^2*x2*x3)"},
}};

constexpr std::array<NamedIdeal, 9> kH5 = {{
    {"H5.I1", 5, "(x0, x1^3, x1^2*x2^2, x1^2*x2*x3^2, x1^2*x2*x3*x4^2)"},
    {"H5.I2", 5,
     "(x0, x1^3, x1^2*x2*x3*x4, x1^2*x2^2*x4, x1^2*x2*x3^2, x1^2*x2^2*x3, x1^2*x2^3)"},
    {"H5.I3", 5,
     "(x0, x1^4, x1^3*x2, x1^3*x3, x1^3*x4, x1^2*x2^2, x1^2*x2*x3^2, x1^2*x2*x3*x4)"},
    {"H5.I4", 5, "(x0, x1^4, x1^3*x2, x1^3*x3, x1^2*x2^2, x1^2*x2*x3, x1^3*x4^2)"},
    {"H5.I5", 5,
     "(x0^2, x0*x1, x0*x2, x0*x3, x0*x4, x1^3, x1^2*x2*x3^2, x1^2*x2*x3*x4, x1^2*x2^2)"},
    {"H5.I6", 5,
     "(x0^2, x0*x1, x0*x2, x0*x3, x0*x4, x1^4, x1^3*x2, x1^3*x3, x1^3*x4, x1^2*x2^2, "
     "x1^2*x2*x3)"},
    {"H5.I7", 5, "(x0^2, x0*x1, x0*x2, x0*x3, x0*x4^2, x1^3, x1^2*x2*x3, x1^2*x2^2)"},
    {"H5.I8", 5, "(x0^2, x0*x1, x0*x2, x0*x3, x1^3, x1^2*x2)"},
    {"H5.I9", 5, "(x0^2, x0*x1, x0*x2, x1^2)"},
}};

}  // namespace

std::span<const NamedIdeal> h4_ideals() { return kH4; }
std::span<const NamedIdeal> h5_ideals() { return kH5; }

const NamedIdeal& find(std::string_view name) {
  for (auto list : {h4_ideals(), h5_ideals()})
    for (const auto& entry : list)
      if (entry.name == name) return entry;
  throw std::invalid_argument("no reference ideal named '" + std::string(name) + "'");
}

MonomialIdeal h5_lex_double_saturation() {
  return parse_ideal_list("(x0, x1^3, x1^2*x2^2, x1^2*x2*x3)", 5);
}

MonomialIdeal h4_lex_section() {
  return parse_ideal_list("(x0, x1^3, x1^2*x2*x3, x1^2*x2^2)", 4);
}

}  // namespace hilbrad::reference
