#include "hilbrad/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "hilbrad/error.hpp"

namespace hilbrad {

namespace {

std::string rational_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer factorial(long long k) {
  Integer f = 1;
  for (long long i = 2; i <= k; ++i) f *= i;
  return f;
}

// Binomial coefficient C(a, b) for a possibly negative upper index, as the
// value of the polynomial C(t, b) at t = a. Only used with a >= 0 here, where
// it is the ordinary count.
Integer count_binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  Integer r = 1;
  for (long long i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

// K(I) = K(I') - t^deg(m) K(I' : m), pivoting on the lex-last generator.
class KRecursion {
public:
  explicit KRecursion(std::size_t n) : n_(n) {}

  std::vector<Integer> run(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    std::string key;
    for (const auto& g : gens) key += g.to_string() + ",";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Monomial& pivot = gens.back();
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    auto base = run(rest);

    std::vector<Monomial> quotients;
    quotients.reserve(rest.size());
    for (const auto& g : rest) quotients.push_back(strip_common(g, pivot));
    auto colon = minimalize(quotients, n_);
    auto shifted = run(colon.generators());

    const unsigned d = pivot.degree();
    std::vector<Integer> out = base;
    if (out.size() < shifted.size() + d) out.resize(shifted.size() + d, 0);
    for (std::size_t i = 0; i < shifted.size(); ++i) out[i + d] -= shifted[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    memo_.emplace(std::move(key), out);
    return out;
  }

private:
  std::size_t n_;
  std::map<std::string, std::vector<Integer>> memo_;
};

Integer count_outside(const MonomialIdeal& ideal, unsigned d) {
  Integer count = 0;
  for (const auto& m : monomials_of_degree(ideal.ambient(), d))
    if (!contains(ideal, m)) ++count;
  return count;
}

void require_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_unit())
    throw DomainError(std::string(what) + " is undefined for the unit ideal");
}

}  // namespace

// ---------------------------------------------------------------------------

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

HilbertPolynomial HilbertPolynomial::constant(const Integer& c) {
  return HilbertPolynomial({Rational(c)});
}

void HilbertPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational HilbertPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational HilbertPolynomial::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
  return v;
}

Integer HilbertPolynomial::at(long long t) const {
  Rational v = (*this)(Rational(t));
  if (boost::multiprecision::denominator(v) != 1)
    throw DomainError("polynomial " + to_string() + " is not integer-valued at t=" +
                      std::to_string(t));
  return boost::multiprecision::numerator(v);
}

std::vector<Rational> HilbertPolynomial::binomial_basis() const {
  std::vector<Rational> out(coeffs_.size(), 0);
  HilbertPolynomial rest = *this;
  for (int k = degree(); k >= 0; --k) {
    if (rest.degree() < k) continue;
    Rational b = rest.coeffs_[k] * Rational(factorial(k));
    out[k] = b;
    rest -= b * binomial_poly(k, k);
  }
  return out;
}

bool HilbertPolynomial::is_integer_valued() const {
  auto basis = binomial_basis();
  return std::all_of(basis.begin(), basis.end(), [](const Rational& b) {
    return boost::multiprecision::denominator(b) == 1;
  });
}

HilbertPolynomial& HilbertPolynomial::operator+=(const HilbertPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

HilbertPolynomial& HilbertPolynomial::operator-=(const HilbertPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

HilbertPolynomial operator*(const Rational& s, HilbertPolynomial p) {
  for (auto& c : p.coeffs_) c *= s;
  p.trim();
  return p;
}

HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return HilbertPolynomial(std::move(out));
}

std::string HilbertPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (k == 0) {
      s += rational_string(mag);
      continue;
    }
    if (mag != 1) s += rational_string(mag) + "*";
    s += "t";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::string HilbertPolynomial::to_binomial_string() const {
  if (coeffs_.empty()) return "0";
  auto basis = binomial_basis();
  std::string s;
  for (int k = static_cast<int>(basis.size()) - 1; k >= 0; --k) {
    const Rational& b = basis[k];
    if (b == 0) continue;
    bool negative = b < 0;
    Rational mag = negative ? Rational(-b) : b;
    if (negative) s += "-";
    else if (!s.empty()) s += "+";
    if (mag != 1) s += rational_string(mag) + "*";
    s += "C(t";
    if (k > 0) s += "+" + std::to_string(k);
    s += "," + std::to_string(k) + ")";
  }
  return s;
}

std::string KPolynomial::to_string() const {
  std::string s;
  for (std::size_t a = 0; a < coefficients.size(); ++a) {
    const Integer& k = coefficients[a];
    if (k == 0) continue;
    Integer mag = k < 0 ? Integer(-k) : k;
    if (s.empty()) {
      if (k < 0) s += "-";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    if (a == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "t";
    if (a > 1) s += "^" + std::to_string(a);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------

HilbertPolynomial binomial_poly(long long shift, long long b) {
  if (b < 0) throw std::invalid_argument("binomial_poly needs b >= 0");
  HilbertPolynomial p = HilbertPolynomial::constant(1);
  for (long long i = 0; i < b; ++i)
    p = p * HilbertPolynomial({Rational(shift - i), Rational(1)});
  return Rational(1, factorial(b)) * p;
}

HilbertPolynomial two_planes_polynomial(long long n) {
  if (n < 3) throw DomainError("two-planes polynomial needs n >= 3");
  HilbertPolynomial p = Rational(2) * binomial_poly(n - 2, n - 2);
  // For n = 3 the correction term C(t-1, -1) vanishes.
  if (n >= 4) p -= binomial_poly(n - 4, n - 4);
  return p;
}

KPolynomial k_polynomial(const MonomialIdeal& ideal) {
  require_proper(ideal, "K-polynomial");
  KRecursion rec(ideal.ambient());
  return KPolynomial{rec.run(ideal.generators())};
}

Integer hilbert_function(const MonomialIdeal& ideal, unsigned d) {
  require_proper(ideal, "Hilbert function");
  auto k = k_polynomial(ideal);
  if (static_cast<int>(d) < k.degree()) return count_outside(ideal, d);
  const auto n = static_cast<long long>(ideal.ambient());
  Integer total = 0;
  for (std::size_t a = 0; a < k.coefficients.size(); ++a)
    total += k.coefficients[a] *
             count_binomial(static_cast<long long>(d) - static_cast<long long>(a) + n, n);
  return total;
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& ideal) {
  require_proper(ideal, "Hilbert polynomial");
  auto k = k_polynomial(ideal);
  const auto n = static_cast<long long>(ideal.ambient());
  HilbertPolynomial p;
  for (std::size_t a = 0; a < k.coefficients.size(); ++a)
    if (k.coefficients[a] != 0)
      p += Rational(k.coefficients[a]) *
           binomial_poly(n - static_cast<long long>(a), n);
  return p;
}

HilbertPolynomial GotzmannDecomposition::recompose() const {
  HilbertPolynomial p;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const long long a = terms[i];
    p += binomial_poly(a - static_cast<long long>(i + 1) + 1, a);
  }
  return p;
}

std::size_t GotzmannDecomposition::multiplicity(unsigned j) const {
  return static_cast<std::size_t>(std::count(terms.begin(), terms.end(), j));
}

GotzmannDecomposition gotzmann_decomposition(const HilbertPolynomial& p,
                                             std::size_t max_terms) {
  if (p.is_zero())
    throw DomainError("not an admissible Hilbert polynomial: zero polynomial");
  GotzmannDecomposition out;
  HilbertPolynomial rest = p;
  while (!rest.is_zero()) {
    if (rest.leading_coefficient() < 0)
      throw DomainError("not an admissible Hilbert polynomial: " + p.to_string() +
                        " (remainder " + rest.to_string() +
                        " has negative leading coefficient)");
    const auto a = static_cast<unsigned>(rest.degree());
    if (!out.terms.empty() && a > out.terms.back())
      throw DomainError("not an admissible Hilbert polynomial: " + p.to_string() +
                        " (decomposition is not non-increasing)");
    if (out.terms.size() >= max_terms)
      throw DomainError("not an admissible Hilbert polynomial: " + p.to_string() +
                        " (more than " + std::to_string(max_terms) + " terms)");
    out.terms.push_back(a);
    const long long i = static_cast<long long>(out.terms.size());
    rest -= binomial_poly(static_cast<long long>(a) - i + 1, a);
    if (rest.degree() > static_cast<int>(a))
      throw DomainError("not an admissible Hilbert polynomial: " + p.to_string());
  }
  return out;
}

std::size_t gotzmann_number(const HilbertPolynomial& p) {
  return gotzmann_decomposition(p).number();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  HilbertPolynomial parse() {
    HilbertPolynomial total;
    skip();
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += Rational(sign) * term();
      first = false;
      skip();
    }
    return total;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg, 1, pos_ + 1);
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }
  Integer number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  HilbertPolynomial term() {
    Integer scale = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      scale = number();
      skip();
      if (peek() != '*') return HilbertPolynomial::constant(scale);
      ++pos_;
      skip();
    }
    if (peek() != 'C') fail("expected C(t+s,b)");
    ++pos_;
    expect('(');
    if (peek() != 't') fail("expected 't'");
    ++pos_;
    skip();
    long long shift = 0;
    if (peek() == '+' || peek() == '-') {
      int sign = peek() == '-' ? -1 : 1;
      ++pos_;
      shift = sign * static_cast<long long>(number());
    }
    expect(',');
    const auto b = static_cast<long long>(number());
    expect(')');
    return Rational(scale) * binomial_poly(shift, b);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational parse_rational(std::string_view token, std::size_t column) {
  auto slash = token.find('/');
  auto integer = [&](std::string_view t, std::size_t col) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) throw ParseError("coefficients: expected a number", 1, col);
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k])))
        throw ParseError("coefficients: unexpected character", 1, col + k);
    return Integer(std::string(t[0] == '+' ? t.substr(1) : t));
  };
  if (slash == std::string_view::npos) return Rational(integer(token, column));
  Integer num = integer(token.substr(0, slash), column);
  Integer den = integer(token.substr(slash + 1), column + slash + 1);
  if (den == 0) throw ParseError("coefficients: zero denominator", 1, column + slash + 1);
  return Rational(num, den);
}

}  // namespace

HilbertPolynomial parse_polynomial(std::string_view text) {
  constexpr std::string_view kTwoPlanes = "twoplanes:";
  if (text.starts_with(kTwoPlanes)) {
    auto rest = text.substr(kTwoPlanes.size());
    if (rest.empty() ||
        !std::all_of(rest.begin(), rest.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("polynomial: expected twoplanes:<n>", 1, kTwoPlanes.size() + 1);
    return two_planes_polynomial(std::stoll(std::string(rest)));
  }
  return PolyParser(text).parse();
}

HilbertPolynomial parse_coefficients(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto end = comma == std::string_view::npos ? text.size() : comma;
    auto token = text.substr(start, end - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
      ++start;
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    coeffs.push_back(parse_rational(token, start + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return HilbertPolynomial(std::move(coeffs));
}

}  // namespace hilbrad
