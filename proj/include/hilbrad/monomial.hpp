#pragma once

// Monomials in k[x0,...,xn]. The coefficient field never appears: over a
// field of characteristic zero Borel-fixed and strongly stable ideals agree,
// so everything downstream is combinatorics on exponent vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hilbrad {

using Exponent = std::uint32_t;

/// Exponent vector (e_0, ..., e_n). x0 is the most significant variable in
/// the lexicographic order; xn is the variable used for saturation.
class Monomial {
public:
  /// The constant monomial 1 in x0..xn.
  static Monomial one(std::size_t n);
  /// The variable x_i in x0..xn.
  static Monomial variable(std::size_t n, std::size_t i);

  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// Ambient index n (the vector has n+1 entries).
  std::size_t ambient() const noexcept { return exps_.size() - 1; }
  std::size_t num_vars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  /// Largest index with a positive exponent, or -1 for the constant monomial.
  int max_variable() const noexcept;

  /// this * x_i
  Monomial times_variable(std::size_t i) const;
  /// Copy with the exponent of x_i replaced.
  Monomial with_exponent(std::size_t i, Exponent e) const;
  /// Copy with the last coordinate dropped (x0..x_{n-1}).
  Monomial drop_last() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

unsigned degree(const Monomial& m) noexcept;

/// True iff a | b. Throws std::invalid_argument on ambient mismatch.
bool divides(const Monomial& a, const Monomial& b);

/// Lexicographic comparison from x0: `greater` means a is lex-greater.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Strict "a comes first" predicate for descending-lex sequences.
struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// m * x_{j-1} / x_j. Requires j >= 1 and x_j | m.
Monomial elementary_move(const Monomial& m, std::size_t j);

/// {x_i * m : 0 <= i <= n}, in descending lex order.
std::vector<Monomial> expansions(const Monomial& m);

/// gcd and the exact quotient a / gcd(a, b).
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial strip_common(const Monomial& a, const Monomial& b);

/// All degree-d monomials in x0..xn, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

/// Parses `x0^2*x1`, `1`, ... in x0..xn. Variables may come in any order;
/// repeated variables multiply. Column offsets in errors are 1-based.
Monomial parse_monomial(std::string_view text, std::size_t n,
                        std::size_t line = 1, std::size_t column = 1);

}  // namespace hilbrad

template <>
struct std::hash<hilbrad::Monomial> {
  std::size_t operator()(const hilbrad::Monomial& m) const noexcept {
    std::size_t h = m.num_vars();
    for (auto e : m.exponents()) h = h * 1000003u ^ e;
    return h;
  }
};
