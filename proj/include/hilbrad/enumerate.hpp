#pragma once

// Exhaustive search for the saturated Borel-fixed ideals of k[x0..xn] with a
// given Hilbert polynomial.
//
// The search walks degrees 1..r, r the Gotzmann number. The degree-(d+1)
// slice of a candidate is the expansion of the degree-d slice plus a
// move-closed set of new xn-free generators. Every strongly stable ideal
// decomposes as a disjoint union of cones g * k[x_{max(g)}..xn] over its
// minimal generators, so the Hilbert polynomial of the partial ideal is known
// exactly at every step; the gap to the target, written in the basis
// C(t-r, j), has to stay coordinatewise non-negative because every generator
// still to come contributes non-negative coordinates. That is the main prune.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hilbrad/error.hpp"
#include "hilbrad/hilbert.hpp"
#include "hilbrad/ideal.hpp"

namespace hilbrad {

class BudgetExceeded : public DomainError {
public:
  explicit BudgetExceeded(std::uint64_t budget)
      : DomainError("search node budget of " + std::to_string(budget) +
                    " exceeded; raise it with --budget"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t budget_;
};

struct EnumerationOptions {
  std::uint64_t node_budget = 10'000'000;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct EnumerationResult {
  /// Canonically ordered, no duplicates.
  std::vector<MonomialIdeal> ideals;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

EnumerationResult enumerate_saturated_borel(std::size_t n, const HilbertPolynomial& p,
                                            const EnumerationOptions& options = {});

/// Independent check for small instances: every move-closed subset of the
/// degree-r monomials with the right size, saturated and filtered. Throws
/// DomainError if there are more than `cap` monomials of degree r.
std::vector<MonomialIdeal> brute_force_oracle(std::size_t n, const HilbertPolynomial& p,
                                              std::size_t cap = 70);

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<MonomialIdeal>& ideals);

}  // namespace hilbrad
