#ifndef POLYCERT_PRIMALITY_HPP
#define POLYCERT_PRIMALITY_HPP

#include <optional>

#include <polycert/integer.hpp>

namespace polycert {

enum class Primality {
  Composite,
  Prime,          // decided deterministically
  ProbablePrime,  // Miller-Rabin with 40 extra bases; error < 4^-40 per base set
};

// Deterministic below 3,317,044,064,679,887,385,961,981 (fixed witness set
// 2..37); probabilistic above.
Primality classify_prime(const Int& n);

inline bool is_prime(const Int& n) { return classify_prime(n) != Primality::Composite; }

struct PrimePowerForm {
  Int prime;
  unsigned exponent = 1;  // u >= 1, prime^u == constant term
  // Primality of the base was only established probabilistically.
  bool probabilistic = false;
};

// (p, u) with c = p^u and p prime, or nullopt when c is not a prime power.
// Requires c >= 2.
std::optional<PrimePowerForm> prime_power_decompose(const Int& c);

}  // namespace polycert

#endif
