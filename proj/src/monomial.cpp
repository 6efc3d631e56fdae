#include "hilbrad/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "hilbrad/error.hpp"

namespace hilbrad {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("monomials live in different rings: " +
                                a.to_string() + " has " +
                                std::to_string(a.num_vars()) + " variables, " +
                                b.to_string() + " has " +
                                std::to_string(b.num_vars()));
}

void fill_degree(std::size_t var, unsigned remaining,
                 std::vector<Exponent>& current, std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    fill_degree(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

Monomial Monomial::one(std::size_t n) {
  return Monomial(std::vector<Exponent>(n + 1, 0));
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i > n) throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> e(n + 1, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)) {
  if (exps_.empty())
    throw std::invalid_argument("a monomial needs at least one variable");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

int Monomial::max_variable() const noexcept {
  for (std::size_t i = exps_.size(); i-- > 0;)
    if (exps_[i] > 0) return static_cast<int>(i);
  return -1;
}

Monomial Monomial::times_variable(std::size_t i) const {
  auto e = exps_;
  ++e.at(i);
  return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t i, Exponent value) const {
  auto e = exps_;
  e.at(i) = value;
  return Monomial(std::move(e));
}

Monomial Monomial::drop_last() const {
  if (exps_.size() < 2)
    throw std::invalid_argument("cannot drop the only variable");
  return Monomial(std::vector<Exponent>(exps_.begin(), exps_.end() - 1));
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

unsigned degree(const Monomial& m) noexcept { return m.degree(); }

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

Monomial elementary_move(const Monomial& m, std::size_t j) {
  if (j == 0 || j >= m.num_vars())
    throw std::invalid_argument("elementary move needs 1 <= j <= n");
  if (m[j] == 0)
    throw std::invalid_argument("x" + std::to_string(j) + " does not divide " +
                                m.to_string());
  auto e = m.exponents();
  --e[j];
  ++e[j - 1];
  return Monomial(std::move(e));
}

std::vector<Monomial> expansions(const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(m.num_vars());
  for (std::size_t i = 0; i < m.num_vars(); ++i)
    out.push_back(m.times_variable(i));
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial strip_common(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a[i] - std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<Exponent> current(n + 1, 0);
  fill_degree(0, d, current, out);
  return out;
}

Monomial parse_monomial(std::string_view text, std::size_t n, std::size_t line,
                        std::size_t column) {
  auto fail = [&](const std::string& msg, std::size_t pos) -> Monomial {
    throw ParseError(msg, line, column + pos);
  };
  if (text.empty()) return fail("empty monomial", 0);
  if (text == "1") return Monomial::one(n);

  std::vector<Exponent> e(n + 1, 0);
  std::size_t pos = 0;
  auto read_number = [&](const char* what) -> unsigned long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail(std::string("expected ") + what, start);
    if (pos - start > 9) fail(std::string(what) + " too large", start);
    return std::stoul(std::string(text.substr(start, pos - start)));
  };

  while (true) {
    if (pos >= text.size() || text[pos] != 'x')
      return fail("expected a variable like x0", pos);
    ++pos;
    std::size_t index_pos = pos;
    auto index = read_number("variable index");
    if (index > n)
      fail("variable x" + std::to_string(index) + " outside x0..x" +
               std::to_string(n),
           index_pos - 1);
    unsigned long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t power_pos = pos;
      power = read_number("exponent");
      if (power == 0) fail("exponent must be at least 1", power_pos);
    }
    e[index] += static_cast<Exponent>(power);
    if (pos == text.size()) break;
    if (text[pos] != '*') return fail("expected '*' between factors", pos);
    ++pos;
  }
  return Monomial(std::move(e));
}

}  // namespace hilbrad
