#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hilbrad/enumerate.hpp"
#include "hilbrad/error.hpp"
#include "hilbrad/hilbert.hpp"
#include "hilbrad/ideal.hpp"
#include "hilbrad/incidence.hpp"
#include "hilbrad/lexcomp.hpp"
#include "hilbrad/lexideal.hpp"
#include "hilbrad/verify.hpp"
#include "json.hpp"

namespace hilbrad::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "text";
  std::optional<std::size_t> n;
  std::string ideal_path;
  std::string gens;
  std::string poly;
  std::string coeffs;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

MonomialIdeal load_ideal(const Common& c) {
  if (!c.gens.empty()) {
    if (!c.n) throw DomainError("--gens needs --n");
    return parse_ideal_list(c.gens, *c.n);
  }
  if (c.ideal_path.empty()) throw DomainError("an ideal is required (--ideal FILE or --gens LIST)");
  return parse_ideal(read_file(c.ideal_path), c.n);
}

HilbertPolynomial load_poly(const Common& c) {
  if (!c.poly.empty() && !c.coeffs.empty())
    throw DomainError("give either --poly or --coeffs, not both");
  if (!c.coeffs.empty()) return parse_coefficients(c.coeffs);
  if (c.poly.empty()) throw DomainError("a Hilbert polynomial is required (--poly or --coeffs)");
  return parse_polynomial(c.poly);
}

std::size_t require_n(const Common& c) {
  if (!c.n) throw DomainError("--n is required");
  return *c.n;
}

json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return gens;
}

json poly_json(const HilbertPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) {
    std::ostringstream s;
    s << c;
    coeffs.push_back(s.str());
  }
  return {{"polynomial", p.to_string()},
          {"binomial", p.to_binomial_string()},
          {"coefficients", coeffs}};
}

bool json_mode(const Common& c) { return c.format == "json"; }

void emit(const Common& c, std::ostream& out, const json& j, const std::string& text) {
  if (json_mode(c))
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

void warn_if_unstable(const MonomialIdeal& ideal, std::ostream& err) {
  if (!is_strongly_stable(ideal))
    err << "warning: ideal is not strongly stable; stripping the last variable is not "
           "the full saturation here\n";
}

void add_ideal_options(CLI::App* app, Common& c) {
  app->add_option("--n", c.n, "ambient index (variables x0..xn)");
  app->add_option("--ideal", c.ideal_path, "ideal file ('-' for stdin)");
  app->add_option("--gens", c.gens, "inline generators, e.g. \"(x0, x1^3)\"");
}

void add_poly_options(CLI::App* app, Common& c) {
  app->add_option("--poly", c.poly, "e.g. 2*C(t+3,3)-C(t+1,1) or twoplanes:5");
  app->add_option("--coeffs", c.coeffs, "c0,c1,... with exact rationals");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Borel-fixed ideals and Hilbert scheme incidence graphs",
               "hilbrad"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads for enumeration (0 = all cores)");
  app.fallthrough();

  std::function<int()> action;

  auto* hp = app.add_subcommand("hp", "Hilbert polynomial of a monomial ideal");
  add_ideal_options(hp, c);
  hp->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      auto p = hilbert_polynomial(ideal);
      auto k = k_polynomial(ideal);
      emit(c, out,
           {{"ideal", ideal_json(ideal)}, {"hilbert_polynomial", poly_json(p)},
            {"k_polynomial", k.to_string()}},
           p.to_binomial_string() + "\n" + p.to_string());
      return 0;
    };
  });

  unsigned hf_degree = 0;
  std::optional<unsigned> hf_max;
  auto* hf = app.add_subcommand("hf", "Hilbert function values");
  add_ideal_options(hf, c);
  hf->add_option("--degree", hf_degree, "degree d");
  hf->add_option("--max-degree", hf_max, "print HF(0..D)");
  hf->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      unsigned lo = hf_max ? 0 : hf_degree;
      unsigned hi = hf_max ? *hf_max : hf_degree;
      json values = json::array();
      std::string text;
      for (unsigned d = lo; d <= hi; ++d) {
        auto v = hilbert_function(ideal, d);
        values.push_back({{"degree", d}, {"value", v.str()}});
        text += (text.empty() ? "" : "\n") + ("HF(" + std::to_string(d) + ")=" + v.str());
      }
      emit(c, out, {{"ideal", ideal_json(ideal)}, {"values", values}}, text);
      return 0;
    };
  });

  auto* gz = app.add_subcommand("gotzmann", "Gotzmann decomposition and number");
  add_poly_options(gz, c);
  gz->callback([&] {
    action = [&] {
      auto p = load_poly(c);
      auto g = gotzmann_decomposition(p);
      std::string terms;
      for (std::size_t i = 0; i < g.terms.size(); ++i)
        terms += (i ? "," : "") + std::to_string(g.terms[i]);
      emit(c, out,
           {{"polynomial", poly_json(p)}, {"terms", g.terms}, {"gotzmann_number", g.number()}},
           "terms=(" + terms + ")\ngotzmann_number=" + std::to_string(g.number()));
      return 0;
    };
  });

  bool lex_check = false;
  auto* lex = app.add_subcommand("lex", "saturated lexicographic ideal");
  lex->add_option("--n", c.n, "ambient index")->required();
  add_poly_options(lex, c);
  lex->add_flag("--check", lex_check, "also build the truncation oracle and compare");
  lex->callback([&] {
    action = [&] {
      const auto n = require_n(c);
      auto p = load_poly(c);
      auto ideal = lex_ideal(n, p);
      if (lex_check) {
        auto oracle = lex_truncation_oracle(n, p);
        if (oracle != ideal) {
          err << "error: closed form " << ideal.to_string() << " disagrees with oracle "
              << oracle.to_string() << "\n";
          return 1;
        }
      }
      emit(c, out, {{"n", n}, {"ideal", ideal_json(ideal)}}, serialize_ideal(ideal));
      return 0;
    };
  });

  EnumerationOptions enum_options;
  auto* en = app.add_subcommand("enum", "all saturated Borel-fixed ideals with a Hilbert polynomial");
  en->add_option("--n", c.n, "ambient index")->required();
  add_poly_options(en, c);
  en->add_option("--budget", enum_options.node_budget, "search node budget")->capture_default_str();
  en->callback([&] {
    action = [&] {
      const auto n = require_n(c);
      auto p = load_poly(c);
      enum_options.threads = threads;
      auto result = enumerate_saturated_borel(n, p, enum_options);
      json ideals = json::array();
      std::string text;
      for (const auto& ideal : result.ideals) {
        ideals.push_back(ideal_json(ideal));
        text += ideal.to_string() + "\n";
      }
      if (json_mode(c)) {
        out << json{{"n", n},
                    {"polynomial", poly_json(p)},
                    {"ideals", ideals},
                    {"count", result.ideals.size()},
                    {"nodes", result.nodes},
                    {"seconds", result.seconds}}
                   .dump(2)
            << "\n";
      } else {
        out << text;
        err << "# " << result.ideals.size() << " ideals, " << result.nodes << " nodes, "
            << result.seconds << " s\n";
      }
      return 0;
    };
  });

  auto* bc = app.add_subcommand("borelcheck", "is the ideal strongly stable (Borel-fixed)?");
  add_ideal_options(bc, c);
  bc->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      bool stable = is_strongly_stable(ideal);
      emit(c, out, {{"ideal", ideal_json(ideal)}, {"strongly_stable", stable}},
           std::string("strongly_stable=") + (stable ? "true" : "false"));
      return 0;
    };
  });

  auto* sc = app.add_subcommand("satcheck", "is the ideal a saturated Borel-fixed ideal?");
  add_ideal_options(sc, c);
  sc->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      warn_if_unstable(ideal, err);
      bool stable = is_strongly_stable(ideal);
      bool saturated_borel = is_saturated_borel(ideal);
      auto sat = saturate_last(ideal);
      emit(c, out,
           {{"ideal", ideal_json(ideal)},
            {"strongly_stable", stable},
            {"saturated_borel", saturated_borel},
            {"saturation", ideal_json(sat)}},
           std::string("saturated_borel=") + (saturated_borel ? "true" : "false") +
               "\nsaturation=" + sat.to_string());
      return 0;
    };
  });

  auto* ds = app.add_subcommand("doublesat", "set the last two variables to 1");
  add_ideal_options(ds, c);
  ds->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      warn_if_unstable(ideal, err);
      auto sat = double_saturate(ideal);
      emit(c, out, {{"ideal", ideal_json(ideal)}, {"double_saturation", ideal_json(sat)}},
           sat.to_string());
      return 0;
    };
  });

  bool raw_section = false;
  auto* se = app.add_subcommand("section", "saturated hyperplane section at xn = 0");
  add_ideal_options(se, c);
  se->add_flag("--raw", raw_section, "skip the saturation in the smaller ring");
  se->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      warn_if_unstable(ideal, err);
      auto section = hyperplane_section_last(ideal);
      if (!raw_section) section = saturate_last(section);
      bool nzd = is_nonzerodivisor_last(ideal);
      emit(c, out,
           {{"ideal", ideal_json(ideal)},
            {"section_n", section.ambient()},
            {"section", ideal_json(section)},
            {"last_variable_nonzerodivisor", nzd}},
           section.to_string() + "\nlast_variable_nonzerodivisor=" + (nzd ? "true" : "false"));
      return 0;
    };
  });

  auto* lc = app.add_subcommand("lexcomp", "does a Borel-fixed point lie on the lexicographic component?");
  add_ideal_options(lc, c);
  add_poly_options(lc, c);
  lc->callback([&] {
    action = [&] {
      auto ideal = load_ideal(c);
      const auto n = c.n.value_or(ideal.ambient());
      auto p = load_poly(c);
      auto report = lex_component_report(ideal, n, p);
      std::string text = std::string("in_lex_component=") +
                         (report.in_lex_component ? "true" : "false") +
                         "\nideal_double_saturation=" + report.ideal_double_saturation.to_string() +
                         "\nlex_double_saturation=" + report.lex_double_saturation.to_string();
      if (!report.validated_ambient) text += "\nstatus=unvalidated";
      emit(c, out,
           {{"in_lex_component", report.in_lex_component},
            {"ideal_double_saturation", ideal_json(report.ideal_double_saturation)},
            {"lex_double_saturation", ideal_json(report.lex_double_saturation)},
            {"status", report.validated_ambient ? "validated" : "unvalidated"}},
           text);
      return 0;
    };
  });

  std::string graph_query;
  std::string graph_source;
  std::string from, to, vertex;
  auto* gr = app.add_subcommand("graph", "radius, centers and distances of an incidence graph");
  gr->add_option("query", graph_query, "radius | centers | distance | eccentricity")
      ->required()
      ->check(CLI::IsMember({"radius", "centers", "distance", "eccentricity"}));
  gr->add_option("source", graph_source, "JSON file, builtin:H4 or builtin:H5")->required();
  gr->add_option("--from", from, "first vertex (distance)");
  gr->add_option("--to", to, "second vertex (distance)");
  gr->add_option("--vertex", vertex, "vertex (eccentricity)");
  gr->callback([&] {
    action = [&] {
      std::optional<IncidenceGraph> g;
      constexpr std::string_view kBuiltin = "builtin:";
      if (graph_source.starts_with(kBuiltin))
        g = paper_graph(std::string_view(graph_source).substr(kBuiltin.size()));
      else
        g = graph_from_json(json::parse(read_file(graph_source)));
      json j;
      std::string text;
      if (graph_query == "radius" || graph_query == "centers") {
        auto rad = radius(*g);
        auto cs = centers(*g);
        std::string list;
        for (std::size_t i = 0; i < cs.size(); ++i) list += (i ? "," : "") + cs[i];
        j = {{"radius", rad}, {"centers", cs}};
        text = graph_query == "radius"
                   ? "radius=" + std::to_string(rad) + ", centers=[" + list + "]"
                   : "centers=[" + list + "]";
      } else if (graph_query == "distance") {
        if (from.empty() || to.empty()) throw DomainError("distance needs --from and --to");
        auto d = distance(*g, from, to);
        j = {{"from", from}, {"to", to}, {"distance", d}};
        text = "distance=" + std::to_string(d);
      } else {
        if (vertex.empty()) throw DomainError("eccentricity needs --vertex");
        auto e = eccentricity(*g, vertex);
        j = {{"vertex", vertex}, {"eccentricity", e}};
        text = "eccentricity=" + std::to_string(e);
      }
      const auto& notes = g->annotations();
      if (notes.contains("status")) {
        j["status"] = notes["status"];
        if (notes["status"] != "complete" && !json_mode(c))
          err << "note: graph status is " << notes["status"].get<std::string>() << "\n";
      }
      emit(c, out, j, text);
      return 0;
    };
  });

  std::string report_path;
  EnumerationOptions verify_options;
  auto* vp = app.add_subcommand("verify-paper", "reproduce the reference computations end to end");
  vp->add_option("--out", report_path, "write report.json here");
  vp->callback([&] {
    action = [&] {
      verify_options.threads = threads;
      auto items = verify_paper(verify_options);
      auto report = verify_report_json(items);
      if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) throw DomainError("cannot write " + report_path);
        file << report.dump(2) << "\n";
      }
      if (json_mode(c)) {
        out << report.dump(2) << "\n";
      } else {
        for (const auto& item : items)
          out << (item.passed ? "PASS " : "FAIL ") << item.name << " (" << item.seconds
              << " s)" << (item.passed ? "" : ": " + item.detail) << "\n";
      }
      return report["passed"].get<bool>() ? 0 : 1;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hilbrad::cli
