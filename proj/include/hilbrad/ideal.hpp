#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbrad/monomial.hpp"

namespace hilbrad {

/// A monomial ideal in k[x0..xn], kept as its minimal generating set in
/// descending lex order. Two ideals are equal iff their generator lists are.
class MonomialIdeal {
public:
  /// Zero ideal of k[x0..xn].
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal unit(std::size_t n);

  std::size_t ambient() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().degree() == 0;
  }
  unsigned max_generator_degree() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// `(x0, x1^3, x1^2*x2^2)`; the zero ideal prints as `(0)`.
  std::string to_string() const;

private:
  friend MonomialIdeal minimalize(std::span<const Monomial>, std::size_t);
  std::size_t n_;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal elements of `gens`.
MonomialIdeal minimalize(std::span<const Monomial> gens, std::size_t n);
MonomialIdeal make_ideal(std::size_t n, std::initializer_list<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// (I : m), generated by g / gcd(g, m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// (I : xn) == I. Throws DomainError for the unit ideal.
bool is_nonzerodivisor_last(const MonomialIdeal& ideal);

/// I : xn^inf, by deleting xn from every generator. This agrees with the
/// saturation by the irrelevant ideal only when I is strongly stable.
MonomialIdeal saturate_last(const MonomialIdeal& ideal);

/// Sets x_{n-1} = xn = 1 in every generator. Requires n >= 1.
MonomialIdeal double_saturate(const MonomialIdeal& ideal);

/// Image of I + (xn) in k[x0..x_{n-1}]. Requires n >= 1. Compose with
/// saturate_last to get the saturated section.
MonomialIdeal hyperplane_section_last(const MonomialIdeal& ideal);

/// Closed under x_j -> x_{j-1} for every generator and every j >= 1.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// Strongly stable with no minimal generator divisible by xn.
bool is_saturated_borel(const MonomialIdeal& ideal);

/// Smallest move-closed set containing `gens`, descending lex.
std::vector<Monomial> borel_closure(std::span<const Monomial> gens);

/// Descending-lex comparison of generator lists, the canonical order used
/// when sorting collections of ideals.
bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b);

// ---------------------------------------------------------------------------
// Ideal file format
//
//   # comment
//   ring n=5
//   x0
//   x1^3
//
// The header is optional when the caller supplies the ambient index.

/// Parses the file format. `default_n` is used when there is no `ring`
/// header; if both are present they must agree.
MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::size_t> default_n = std::nullopt);

/// Parses `(x0, x1^3, ...)` or `x0, x1^3` in k[x0..xn].
MonomialIdeal parse_ideal_list(std::string_view text, std::size_t n);

/// Always minimal and sorted, with a `ring` header.
std::string serialize_ideal(const MonomialIdeal& ideal);

}  // namespace hilbrad
