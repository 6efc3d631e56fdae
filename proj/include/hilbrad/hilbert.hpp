#pragma once

// Hilbert functions and polynomials of monomial ideals, exact throughout.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hilbrad/ideal.hpp"

namespace hilbrad {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in t with rational coefficients c_0..c_d. The
/// coefficient vector never carries trailing zeros; zero is empty.
class HilbertPolynomial {
public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coefficients);
  static HilbertPolynomial constant(const Integer& c);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational leading_coefficient() const;

  Rational operator()(const Rational& t) const;
  /// Value at an integer; throws DomainError if it is not an integer.
  Integer at(long long t) const;

  /// Coefficients b_k with P(t) = sum_k b_k * C(t+k, k). They are all
  /// integers exactly when P is integer-valued.
  std::vector<Rational> binomial_basis() const;
  bool is_integer_valued() const;

  HilbertPolynomial& operator+=(const HilbertPolynomial& other);
  HilbertPolynomial& operator-=(const HilbertPolynomial& other);
  friend HilbertPolynomial operator+(HilbertPolynomial a, const HilbertPolynomial& b) {
    return a += b;
  }
  friend HilbertPolynomial operator-(HilbertPolynomial a, const HilbertPolynomial& b) {
    return a -= b;
  }
  friend HilbertPolynomial operator*(const Rational& s, HilbertPolynomial p);
  /// Product of polynomials.
  friend HilbertPolynomial operator*(const HilbertPolynomial& a,
                                     const HilbertPolynomial& b);
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

  /// `1/3*t^3 + 2*t^2 + 11/3*t + 1`
  std::string to_string() const;
  /// `2*C(t+3,3)-C(t+1,1)`, the C(t+k,k) basis.
  std::string to_binomial_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Numerator K(t) of the Hilbert series of S/I over (1-t)^(n+1).
struct KPolynomial {
  std::vector<Integer> coefficients;  // k_0, ..., k_D

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const KPolynomial&, const KPolynomial&) = default;
  std::string to_string() const;
};

/// C(t+shift, b) = prod_{i<b} (t+shift-i) / b!.
HilbertPolynomial binomial_poly(long long shift, long long b);

/// 2*C(t+n-2, n-2) - C(t+n-4, n-4): two codimension-two linear spaces of
/// P^n meeting transversely. Requires n >= 3.
HilbertPolynomial two_planes_polynomial(long long n);

KPolynomial k_polynomial(const MonomialIdeal& ideal);

/// dim_k (S/I)_d.
Integer hilbert_function(const MonomialIdeal& ideal, unsigned d);

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& ideal);

/// P = sum_{i=1..r} C(t + a_i - i + 1, a_i) with a_1 >= ... >= a_r.
struct GotzmannDecomposition {
  std::vector<unsigned> terms;

  std::size_t number() const noexcept { return terms.size(); }
  HilbertPolynomial recompose() const;
  /// Multiplicity of the value j among the terms.
  std::size_t multiplicity(unsigned j) const;
};

/// Throws DomainError("not an admissible Hilbert polynomial ...") when the
/// recursion breaks down or runs past `max_terms`.
GotzmannDecomposition gotzmann_decomposition(const HilbertPolynomial& p,
                                             std::size_t max_terms = 1'000'000);
std::size_t gotzmann_number(const HilbertPolynomial& p);

/// Reads `2*C(t+3,3)-C(t+1,1)`, a plain integer, or `twoplanes:<n>`.
HilbertPolynomial parse_polynomial(std::string_view text);
/// Reads `c0,c1,...` where each entry is an integer or a fraction `p/q`.
HilbertPolynomial parse_coefficients(std::string_view text);

}  // namespace hilbrad
