#include "hilbrad/ideal.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "hilbrad/error.hpp"

namespace hilbrad {

namespace {

void require_ambient(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.ambient() != ideal.ambient())
    throw std::invalid_argument("monomial " + m.to_string() +
                                " is not in the ring of the ideal (n=" +
                                std::to_string(ideal.ambient()) + ")");
}

// Applies `f` to every generator exponent vector, then minimalizes.
template <class F>
MonomialIdeal map_generators(const MonomialIdeal& ideal, std::size_t new_n,
                             F&& f) {
  std::vector<Monomial> out;
  out.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    if (auto m = f(g)) out.push_back(std::move(*m));
  }
  return minimalize(out, new_n);
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  auto one = Monomial::one(n);
  return minimalize(std::span<const Monomial>(&one, 1), n);
}

unsigned MonomialIdeal::max_generator_degree() const noexcept {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.ambient() != n)
      throw std::invalid_argument("generator " + g.to_string() +
                                  " does not live in k[x0..x" +
                                  std::to_string(n) + "]");
  // Sorting by degree first means a divisor is always seen before its
  // multiples.
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Monomial& a, const Monomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return LexDescending{}(a, b);
            });
  MonomialIdeal ideal(n);
  for (auto& m : sorted) {
    bool redundant = std::any_of(
        ideal.gens_.begin(), ideal.gens_.end(),
        [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) ideal.gens_.push_back(std::move(m));
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end(), LexDescending{});
  return ideal;
}

MonomialIdeal make_ideal(std::size_t n, std::initializer_list<Monomial> gens) {
  return minimalize(std::span<const Monomial>(gens.begin(), gens.size()), n);
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  require_ambient(ideal, m);
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ideals live in different rings");
  return a == b;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  require_ambient(ideal, m);
  return map_generators(ideal, ideal.ambient(), [&](const Monomial& g) {
    return std::optional<Monomial>(strip_common(g, m));
  });
}

bool is_nonzerodivisor_last(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw DomainError("non-zero-divisor test is undefined on the unit ideal");
  const auto n = ideal.ambient();
  return colon_by_monomial(ideal, Monomial::variable(n, n)) == ideal;
}

MonomialIdeal saturate_last(const MonomialIdeal& ideal) {
  const auto n = ideal.ambient();
  return map_generators(ideal, n, [&](const Monomial& g) {
    return std::optional<Monomial>(g.with_exponent(n, 0));
  });
}

MonomialIdeal double_saturate(const MonomialIdeal& ideal) {
  const auto n = ideal.ambient();
  if (n == 0)
    throw std::invalid_argument("double saturation needs at least two variables");
  return map_generators(ideal, n, [&](const Monomial& g) {
    return std::optional<Monomial>(g.with_exponent(n, 0).with_exponent(n - 1, 0));
  });
}

MonomialIdeal hyperplane_section_last(const MonomialIdeal& ideal) {
  const auto n = ideal.ambient();
  if (n == 0)
    throw std::invalid_argument("hyperplane section needs at least two variables");
  return map_generators(ideal, n - 1,
                        [&](const Monomial& g) -> std::optional<Monomial> {
                          if (g[n] > 0) return std::nullopt;
                          return g.drop_last();
                        });
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    for (std::size_t j = 1; j < g.num_vars(); ++j)
      if (g[j] > 0 && !contains(ideal, elementary_move(g, j))) return false;
  return true;
}

bool is_saturated_borel(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) return false;
  const auto n = ideal.ambient();
  return std::none_of(ideal.generators().begin(), ideal.generators().end(),
                      [n](const Monomial& g) { return g[n] > 0; });
}

std::vector<Monomial> borel_closure(std::span<const Monomial> gens) {
  std::set<Monomial, LexDescending> seen;
  std::vector<Monomial> stack(gens.begin(), gens.end());
  while (!stack.empty()) {
    Monomial m = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(m).second) continue;
    for (std::size_t j = 1; j < m.num_vars(); ++j)
      if (m[j] > 0) stack.push_back(elementary_move(m, j));
  }
  return {seen.begin(), seen.end()};
}

bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(),
                                      gb.end(), LexDescending{});
}

MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> default_n) {
  std::optional<std::size_t> header_n;
  struct Pending {
    std::string_view token;
    std::size_t line, column;
  };
  std::vector<Pending> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    std::size_t last = line.size();
    while (last > first && is_blank(line[last - 1])) --last;
    if (first == last) continue;
    std::string_view body = line.substr(first, last - first);
    const std::size_t column = first + 1;

    if (body.starts_with("ring")) {
      if (header_n || !pending.empty())
        throw ParseError("'ring' header must be the first entry", line_no, column);
      auto rest = body.substr(4);
      std::size_t k = 0;
      while (k < rest.size() && is_blank(rest[k])) ++k;
      if (!rest.substr(k).starts_with("n="))
        throw ParseError("expected 'ring n=<N>'", line_no, column + 4 + k);
      auto digits = rest.substr(k + 2);
      std::size_t value = 0;
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("bad ambient index in header", line_no,
                         column + 4 + k + 2);
      header_n = value;
      continue;
    }
    pending.push_back({body, line_no, column});
  }

  if (header_n && default_n && *header_n != *default_n)
    throw ParseError("header says n=" + std::to_string(*header_n) +
                         " but n=" + std::to_string(*default_n) + " was requested",
                     1, 1);
  auto n = header_n ? header_n : default_n;
  if (!n)
    throw ParseError("no 'ring n=<N>' header and no ambient index given", 1, 1);

  std::vector<Monomial> gens;
  gens.reserve(pending.size());
  for (const auto& p : pending)
    gens.push_back(parse_monomial(p.token, *n, p.line, p.column));
  return minimalize(gens, *n);
}

MonomialIdeal parse_ideal_list(std::string_view text, std::size_t n) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_blank(text[pos])) ++pos;
  };
  skip();
  bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<Monomial> gens;
  while (true) {
    skip();
    std::size_t begin = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
           !is_blank(text[pos]))
      ++pos;
    auto token = text.substr(begin, pos - begin);
    if (token == "0" && gens.empty()) {
      // zero ideal
    } else {
      gens.push_back(parse_monomial(token, n, 1, begin + 1));
    }
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')')
      throw ParseError("expected ')'", 1, pos + 1);
    ++pos;
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input", 1, pos + 1);
  return minimalize(gens, n);
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring n=" + std::to_string(ideal.ambient()) + "\n";
  for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
  return out;
}

}  // namespace hilbrad
