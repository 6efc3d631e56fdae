// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "hilbrad/enumerate.hpp"
#include "hilbrad/incidence.hpp"
#include "hilbrad/lexcomp.hpp"
#include "hilbrad/lexideal.hpp"
#include "hilbrad/reference_data.hpp"
#include "support.hpp"

using namespace hilbrad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<MonomialIdeal> reference_set(std::span<const reference::NamedIdeal> named) {
  std::vector<MonomialIdeal> out;
  for (const auto& x : named) out.push_back(x.ideal());
  canonicalize(out);
  return out;
}

std::string join(const std::vector<MonomialIdeal>& ideals) {
  std::string s;
  for (const auto& i : ideals) s += i.to_string() + "\n";
  return s;
}

// Returns an empty string on success, otherwise what went wrong.
std::string enum_matches(std::size_t n, std::span<const reference::NamedIdeal> expected,
                         double limit) {
  const auto start = Clock::now();
  EnumerationOptions options;
  auto result = enumerate_saturated_borel(n, two_planes_polynomial(static_cast<long long>(n)),
                                          options);
  const double elapsed = seconds_since(start);
  // Compare the serialized form, which is what the CLI prints.
  if (join(result.ideals) != join(reference_set(expected)))
    return "ideal list differs:\n" + join(result.ideals);
  if (elapsed > limit) return "took " + std::to_string(elapsed) + " s";
  if (result.nodes > options.node_budget) return "node budget exceeded";
  return {};
}

std::string criterion_lex() {
  for (std::size_t n : {4, 5}) {
    auto p = two_planes_polynomial(static_cast<long long>(n));
    auto expected = reference::find(n == 4 ? "H4.Ilex" : "H5.I1").ideal();
    auto closed = lex_ideal(n, p);
    if (closed != expected) return "closed form for n=" + std::to_string(n) + " is " + closed.to_string();
    if (lex_truncation_oracle(n, p) != closed) return "oracle disagrees for n=" + std::to_string(n);
  }
  return {};
}

std::string criterion_lex_component() {
  const auto p = two_planes_polynomial(5);
  const auto common = parse_ideal_list("(x0, x1^3, x1^2*x2^2, x1^2*x2*x3)", 4);
  for (const auto& named : reference::h5_ideals()) {
    const bool expected = named.name != "H5.I8" && named.name != "H5.I9";
    auto report = lex_component_report(named.ideal(), 5, p);
    if (report.in_lex_component != expected) return std::string(named.name) + " misclassified";
    if (expected && report.ideal_double_saturation.to_string() != common.to_string())
      return std::string(named.name) + " double saturation " + report.ideal_double_saturation.to_string();
  }
  return {};
}

std::string criterion_sections() {
  const auto expected = parse_ideal_list("(x0, x1^3, x1^2*x2*x3, x1^2*x2^2)", 4);
  for (const auto& named : reference::h5_ideals()) {
    if (named.name == "H5.I8" || named.name == "H5.I9") continue;
    auto ideal = named.ideal();
    auto section = saturate_last(hyperplane_section_last(ideal));
    if (section != expected) return std::string(named.name) + " section " + section.to_string();
    if (!is_nonzerodivisor_last(ideal)) return std::string(named.name) + ": x5 is a zero divisor";
  }
  return {};
}

std::string criterion_graphs() {
  auto h5 = paper_graph("H5");
  if (radius(h5) != 2) return "H5 radius " + std::to_string(radius(h5));
  if (eccentricity(h5, "H5_lex") != 3) return "H5 ecc(lex) " + std::to_string(eccentricity(h5, "H5_lex"));
  auto h4 = paper_graph("H4");
  if (radius(h4) != 1) return "H4 radius " + std::to_string(radius(h4));
  if (centers(h4) != std::vector<std::string>{"H4_2"}) return "H4 centers wrong";
  if (distance(h4, "H4_1", "H4_lex") != 2) return "d(H4_1,H4_lex) wrong";
  return {};
}

std::string criterion_hilbert() {
  std::mt19937 rng(20240601);
  int tested = 0;
  while (tested < 200) {
    const std::size_t n = 1 + static_cast<std::size_t>(tested % 3);
    auto ideal = testing::random_ideal(rng, n, 4);
    if (ideal.is_unit()) continue;
    for (unsigned d = 0; d <= 8; ++d)
      if (hilbert_function(ideal, d) != testing::brute_force_hf(ideal, d))
        return "HF mismatch on " + ideal.to_string() + " in degree " + std::to_string(d);
    ++tested;
  }
  int checked = 0;
  for (auto set : {&reference::h4_ideals, &reference::h5_ideals})
    for (const auto& named : (*set)()) {
      auto p = two_planes_polynomial(static_cast<long long>(named.n));
      auto ideal = named.ideal();
      if (hilbert_polynomial(ideal) != p) return std::string(named.name) + " has the wrong HP";
      const auto r = static_cast<unsigned>(gotzmann_number(p));
      if (r != (named.n == 4 ? 4u : 6u)) return "unexpected Gotzmann number";
      for (unsigned d = r; d <= r + 6; ++d)
        if (hilbert_function(ideal, d) != p.at(d))
          return std::string(named.name) + " HF differs from HP in degree " + std::to_string(d);
      ++checked;
    }
  if (checked != 12) return "expected 12 reference ideals";
  return {};
}

std::string criterion_oracle() {
  const std::vector<HilbertPolynomial> polys = {
      HilbertPolynomial::constant(1), HilbertPolynomial::constant(2),
      HilbertPolynomial::constant(3), HilbertPolynomial({1, 1}),
      HilbertPolynomial({1, 2}),      HilbertPolynomial({2, 2})};
  EnumerationOptions options;
  for (std::size_t n : {2, 3})
    for (const auto& p : polys) {
      if (gotzmann_number(p) > 4) continue;
      if (enumerate_saturated_borel(n, p, options).ideals != brute_force_oracle(n, p))
        return "disagreement for n=" + std::to_string(n) + ", P=" + p.to_string();
    }
  return {};
}

std::string criterion_threads() {
  auto capture = [](const std::string& threads) {
    std::ostringstream out, err;
    int code = cli::run({"--threads", threads, "enum", "--n", "5", "--poly", "twoplanes:5"}, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  auto one = capture("1");
  auto four = capture("4");
  if (one != four) return "outputs differ";
  if (one.rfind("0\n", 0) != 0) return "enum failed";
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"1 enum n=4 two planes: 3 ideals, <10 s",
       [] { return enum_matches(4, reference::h4_ideals(), 10); }},
      {"2 enum n=5 two planes: 9 ideals, <5 min, within budget",
       [] { return enum_matches(5, reference::h5_ideals(), 300); }},
      {"3 lex ideals n=4,5 and truncation oracle", criterion_lex},
      {"4 lex component classification and common double saturation", criterion_lex_component},
      {"5 hyperplane sections and nonzerodivisor", criterion_sections},
      {"6 incidence graph radius, centers, distances", criterion_graphs},
      {"7 Hilbert function vs brute force; reference HP and HF", criterion_hilbert},
      {"8 enumeration vs brute-force oracle", criterion_oracle},
      {"9 enum output independent of thread count", criterion_threads},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    std::cout << (problem.empty() ? "PASS " : "FAIL ") << name << " [" << elapsed << " s]";
    if (!problem.empty()) std::cout << ": " << problem;
    std::cout << "\n";
    failures += !problem.empty();
  }
  return failures;
}
