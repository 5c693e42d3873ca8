#ifndef POLYCERT_KRONECKER_HPP
#define POLYCERT_KRONECKER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <polycert/polynomial.hpp>

namespace polycert {

struct KroneckerLimits {
  // 0 means floor(degree/2), the full search.
  std::size_t max_degree = 0;
  // Cap on the number of divisors enumerated per sample point.
  std::size_t divisor_cap = 100000;
  // Sample values above this are only partially factored by trial division;
  // the search is then reported truncated, never wrong.
  Int value_bound = Int("1000000000000");
};

struct FactorSearchResult {
  // First factor pair (g, h) with f = g*h in canonical enumeration order.
  std::optional<std::pair<Polynomial, Polynomial>> factors;
  // When no factor was found: true iff every candidate was enumerated, which
  // upgrades "no factor found" to a proof of irreducibility.
  bool exhaustive = true;
};

// Exhaustive factor search by evaluation at 0, 1, -1, 2, -2, ...: enumerate
// integer divisors of the sample values, interpolate each divisor tuple and
// test exact divisibility.  Requires degree >= 2 and nonzero constant term
// (split off x^k first).
FactorSearchResult kronecker_find_factor(const Polynomial& f,
                                         const KroneckerLimits& limits = {});

struct Factorization {
  std::vector<Polynomial> factors;  // degree >= 1, positive leading coefficients,
                                    // sorted by (degree, coefficients)
  int unit = 1;                     // unit * product(factors) == input exactly
  bool exhaustive = true;           // every non-split part proved irreducible
  KroneckerLimits limits;
};

// Recursive factor search until all parts are exhaustively irreducible or the
// search is truncated.  Requires degree >= 1.
Factorization full_factor(const Polynomial& f, const KroneckerLimits& limits = {});

// Quotient q with f = g*q exactly over the integers, or nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace polycert

#endif
