#ifndef POLYCERT_CRITERIA_HPP
#define POLYCERT_CRITERIA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <polycert/kronecker.hpp>
#include <polycert/polynomial.hpp>
#include <polycert/primality.hpp>

namespace polycert {

enum class Verdict { Irreducible, Inconclusive, ReducibleWitness };

std::string_view to_string(Verdict v);

// One evaluated hypothesis; detail carries the numerals actually compared.
struct HypothesisReport {
  std::string name;
  bool holds = false;
  std::string detail;
};

// Auditable verdict: Irreducible requires every report to hold;
// ReducibleWitness carries a factorization that multiplies back exactly;
// Inconclusive asserts nothing.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string criterion;  // "Theorem", "Corollary", "Prop1".."Prop4", "Linear",
                          // "Oracle", or "None"
  std::optional<Int> prime;
  std::optional<unsigned> exponent;
  std::optional<std::size_t> m;
  std::optional<Int> bound_lhs;  // p^u side of the dominance comparison
  std::optional<Int> bound_rhs;  // coefficient magnitude sum
  bool primality_probabilistic = false;
  std::vector<HypothesisReport> reports;
  std::optional<Factorization> witness;
};

// Main criterion: f = a_n x^n + ... + a_m x^m + p^u with p ∤ a_m,
// gcd(u, m) = 1 and p^u > |a_n| + ... + |a_m| is irreducible; p may divide
// a_n.  Degree 1 certifies via the "Linear" criterion; degree <= 0 throws.
Certificate check_theorem(const Polynomial& f);

// Specialization with m = q prime and q ∤ u in place of gcd(u, m) = 1.
Certificate check_corollary(const Polynomial& f);

// Prime constant term p > |a_n| + ... + |a_1|; no divisibility hypothesis.
Certificate check_prop1(const Polynomial& f);

// Constant p^u with p ∤ a_1 and p^u > |a_n| + ... + |a_1|.
Certificate check_prop2(const Polynomial& f);

// a_1 = 0, p ∤ a_2, odd u, and the dominance bound.
Certificate check_prop3(const Polynomial& f);

// a_1 = a_2 = 0, p ∤ a_n a_3, 3 ∤ u, and the dominance bound.
Certificate check_prop4(const Polynomial& f);

struct CheckAllOptions {
  // Consult the Kronecker search when every criterion is inconclusive; a
  // found factor upgrades the verdict to ReducibleWitness.
  bool use_oracle = false;
  KroneckerLimits limits;
};

// Theorem, Corollary, Prop1..Prop4 in order; first Irreducible certificate
// wins, otherwise an aggregate Inconclusive (optionally oracle-upgraded).
Certificate check_all(const Polynomial& f, const CheckAllOptions& opts = {});

}  // namespace polycert

#endif
