#include "hilbrad/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "hilbrad/incidence.hpp"
#include "hilbrad/lexcomp.hpp"
#include "hilbrad/lexideal.hpp"
#include "hilbrad/reference_data.hpp"

namespace hilbrad {

namespace {

using Check = std::function<std::string()>;  // empty string means pass

VerifyItem run_item(std::string name, const Check& check) {
  VerifyItem item;
  item.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    item.detail = check();
    item.passed = item.detail.empty();
    if (item.passed) item.detail = "ok";
  } catch (const std::exception& e) {
    item.passed = false;
    item.detail = std::string("error: ") + e.what();
  }
  item.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return item;
}

std::vector<MonomialIdeal> load(std::span<const reference::NamedIdeal> list) {
  std::vector<MonomialIdeal> out;
  for (const auto& entry : list) out.push_back(entry.ideal());
  canonicalize(out);
  return out;
}

std::string compare_sets(const std::vector<MonomialIdeal>& got,
                         const std::vector<MonomialIdeal>& want) {
  std::ostringstream msg;
  for (const auto& w : want)
    if (std::find(got.begin(), got.end(), w) == got.end())
      msg << "missing " << w.to_string() << "; ";
  for (const auto& g : got)
    if (std::find(want.begin(), want.end(), g) == want.end())
      msg << "unexpected " << g.to_string() << "; ";
  if (msg.str().empty() && got.size() != want.size()) msg << "count mismatch";
  return msg.str();
}

std::string enum_check(std::size_t n, std::span<const reference::NamedIdeal> list,
                       const EnumerationOptions& options) {
  auto result = enumerate_saturated_borel(n, two_planes_polynomial(static_cast<long long>(n)),
                                          options);
  return compare_sets(result.ideals, load(list));
}

std::string lex_check(std::size_t n, std::string_view reference_name) {
  const auto p = two_planes_polynomial(static_cast<long long>(n));
  const auto want = reference::find(reference_name).ideal();
  const auto closed = lex_ideal(n, p);
  const auto oracle = lex_truncation_oracle(n, p);
  std::string msg;
  if (closed != want) msg += "closed form gives " + closed.to_string() + "; ";
  if (oracle != want) msg += "truncation oracle gives " + oracle.to_string() + "; ";
  return msg;
}

template <class T>
std::string expect_equal(const std::string& what, const T& got, const T& want) {
  if (got == want) return {};
  std::ostringstream msg;
  msg << what << " = " << got << ", expected " << want << "; ";
  return msg.str();
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "]";
}

}  // namespace

std::vector<VerifyItem> verify_paper(const EnumerationOptions& options) {
  std::vector<VerifyItem> items;

  items.push_back(run_item("lemma3.enum", [&] {
    return enum_check(4, reference::h4_ideals(), options);
  }));
  items.push_back(run_item("lemma5.enum", [&] {
    return enum_check(5, reference::h5_ideals(), options);
  }));
  items.push_back(run_item("lex.n4", [] { return lex_check(4, "H4.Ilex"); }));
  items.push_back(run_item("lex.n5", [] { return lex_check(5, "H5.I1"); }));

  items.push_back(run_item("reeves.classification", [] {
    const auto p = two_planes_polynomial(5);
    const auto common = reference::h5_lex_double_saturation();
    std::string msg;
    auto list = reference::h5_ideals();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const bool expected = i < 7;
      auto report = lex_component_report(list[i].ideal(), 5, p);
      if (report.in_lex_component != expected)
        msg += std::string(list[i].name) + " classified " +
               (report.in_lex_component ? "in" : "outside") + " the lex component; ";
      if (report.lex_double_saturation != common)
        msg += "lex double saturation is " + report.lex_double_saturation.to_string() + "; ";
      if (expected && report.ideal_double_saturation != common)
        msg += std::string(list[i].name) + " double saturation is " +
               report.ideal_double_saturation.to_string() + "; ";
    }
    return msg;
  }));

  items.push_back(run_item("lemma7.sections", [] {
    const auto want = reference::h4_lex_section();
    std::string msg;
    auto list = reference::h5_ideals();
    for (std::size_t i = 0; i < 7; ++i) {
      const auto ideal = list[i].ideal();
      const auto section = saturate_last(hyperplane_section_last(ideal));
      if (section != want)
        msg += std::string(list[i].name) + " section is " + section.to_string() + "; ";
      if (!is_nonzerodivisor_last(ideal))
        msg += "x5 is a zero divisor mod " + std::string(list[i].name) + "; ";
    }
    return msg;
  }));

  items.push_back(run_item("graph.H4", [] {
    const auto g = paper_graph("H4");
    std::string msg;
    msg += expect_equal("radius", radius(g), 1L);
    msg += expect_equal("centers", join(centers(g)), std::string("[H4_2]"));
    msg += expect_equal("d(H4_1,H4_lex)", distance(g, "H4_1", "H4_lex"), 2L);
    msg += expect_equal("radius <= deg P + 1", radius(g) <= 3, true);
    return msg;
  }));

  items.push_back(run_item("graph.H5", [] {
    const auto g = paper_graph("H5");
    std::string msg;
    msg += expect_equal("radius", radius(g), 2L);
    msg += expect_equal("eccentricity(H5_lex)", eccentricity(g, "H5_lex"), 3L);
    msg += expect_equal("centers", join(centers(g)), std::string("[H5_2,H5_3,H5_4,H5_5]"));
    msg += expect_equal("d(H5_1,H5_lex)", distance(g, "H5_1", "H5_lex"), 3L);
    msg += expect_equal("radius <= deg P + 1", radius(g) <= 4, true);
    return msg;
  }));

  return items;
}

nlohmann::json verify_report_json(const std::vector<VerifyItem>& items) {
  nlohmann::json out = nlohmann::json::array();
  bool all = true;
  for (const auto& item : items) {
    out.push_back({{"name", item.name},
                   {"passed", item.passed},
                   {"detail", item.detail},
                   {"seconds", item.seconds}});
    all = all && item.passed;
  }
  return {{"items", out}, {"passed", all}};
}

}  // namespace hilbrad
