// Ideals cross the boundary as (n, [generator strings]); polynomials as
// strings in the CLI grammar.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbrad/enumerate.hpp"
#include "hilbrad/error.hpp"
#include "hilbrad/incidence.hpp"
#include "hilbrad/lexcomp.hpp"
#include "hilbrad/lexideal.hpp"
#include "hilbrad/verify.hpp"

namespace py = pybind11;
using namespace hilbrad;

namespace {

using Gens = std::vector<std::string>;

MonomialIdeal to_ideal(std::size_t n, const Gens& gens) {
  std::vector<Monomial> monomials;
  for (const auto& g : gens) monomials.push_back(parse_monomial(g, n));
  return minimalize(monomials, n);
}

Gens to_gens(const MonomialIdeal& ideal) {
  Gens out;
  for (const auto& g : ideal.generators()) out.push_back(g.to_string());
  return out;
}

IncidenceGraph load_graph(const std::string& name) { return paper_graph(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Borel-fixed ideals, Hilbert polynomials and incidence graphs";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_ideal", [](const std::string& text) {
    auto ideal = parse_ideal(text);
    return py::make_tuple(ideal.ambient(), to_gens(ideal));
  }, py::arg("text"), "Parse an ideal file; returns (n, generators).");

  m.def("hilbert_polynomial", [](std::size_t n, const Gens& gens) {
    return hilbert_polynomial(to_ideal(n, gens)).to_binomial_string();
  }, py::arg("n"), py::arg("generators"));

  m.def("hilbert_function", [](std::size_t n, const Gens& gens, unsigned d) {
    return hilbert_function(to_ideal(n, gens), d).str();
  }, py::arg("n"), py::arg("generators"), py::arg("degree"),
     "Value as a decimal string (it may exceed 64 bits).");

  m.def("gotzmann", [](const std::string& poly) {
    return gotzmann_decomposition(parse_polynomial(poly)).terms;
  }, py::arg("poly"));

  m.def("lex_ideal", [](std::size_t n, const std::string& poly) {
    return to_gens(lex_ideal(n, parse_polynomial(poly)));
  }, py::arg("n"), py::arg("poly"));

  m.def("is_strongly_stable", [](std::size_t n, const Gens& gens) {
    return is_strongly_stable(to_ideal(n, gens));
  }, py::arg("n"), py::arg("generators"));

  m.def("double_saturate", [](std::size_t n, const Gens& gens) {
    return to_gens(double_saturate(to_ideal(n, gens)));
  }, py::arg("n"), py::arg("generators"));

  m.def("section", [](std::size_t n, const Gens& gens) {
    return to_gens(saturate_last(hyperplane_section_last(to_ideal(n, gens))));
  }, py::arg("n"), py::arg("generators"));

  m.def("enumerate_borel",
        [](std::size_t n, const std::string& poly, std::uint64_t budget, unsigned threads) {
          EnumerationOptions options;
          options.node_budget = budget;
          options.threads = threads;
          EnumerationResult result;
          {
            py::gil_scoped_release release;
            result = enumerate_saturated_borel(n, parse_polynomial(poly), options);
          }
          std::vector<Gens> ideals;
          for (const auto& ideal : result.ideals) ideals.push_back(to_gens(ideal));
          return ideals;
        },
        py::arg("n"), py::arg("poly"), py::arg("budget") = 10'000'000, py::arg("threads") = 0);

  m.def("in_lex_component", [](std::size_t n, const Gens& gens, const std::string& poly) {
    return in_lex_component(to_ideal(n, gens), n, parse_polynomial(poly));
  }, py::arg("n"), py::arg("generators"), py::arg("poly"));

  m.def("radius", [](const std::string& name) { return radius(load_graph(name)); },
        py::arg("graph"), "Radius of a built-in graph (\"H4\" or \"H5\").");
  m.def("centers", [](const std::string& name) { return centers(load_graph(name)); },
        py::arg("graph"));
  m.def("distance", [](const std::string& name, const std::string& a, const std::string& b) {
    return distance(load_graph(name), a, b);
  }, py::arg("graph"), py::arg("a"), py::arg("b"));

  m.def("verify_paper", [] {
    std::vector<VerifyItem> items;
    {
      py::gil_scoped_release release;
      items = verify_paper();
    }
    py::dict out;
    for (const auto& item : items) out[py::str(item.name)] = item.passed;
    return out;
  }, "Run the reference checks; maps item name to pass/fail.");
}
