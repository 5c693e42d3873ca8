#include <polycert/primality.hpp>

#include <random>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace polycert {

namespace mp = boost::multiprecision;

Int integer_kth_root(const Int& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("integer_kth_root: negative radicand");
  if (k == 0) throw std::invalid_argument("integer_kth_root: k = 0");
  if (k == 1 || n < 2) return n;
  Int lo = 1;
  Int hi = Int(1) << (mp::msb(n) / k + 1);
  while (lo < hi) {  // invariant: lo^k <= n < (hi+1)^k
    Int mid = (lo + hi + 1) / 2;
    if (mp::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

namespace {

// Strong probable-prime test to base a; n odd, n > 2, n - 1 = d * 2^s.
bool strong_probable_prime(const Int& n, const Int& a, const Int& d, unsigned s) {
  Int x = mp::powm(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Witness set deterministic for n < 3,317,044,064,679,887,385,961,981.
constexpr unsigned kDeterministicWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const Int kDeterministicBound("3317044064679887385961981");

constexpr unsigned kExtraBases = 40;

}  // namespace

Primality classify_prime(const Int& n) {
  if (n < 2) return Primality::Composite;
  for (unsigned p : kDeterministicWitnesses) {
    if (n == p) return Primality::Prime;
    if (n % p == 0) return Primality::Composite;
  }
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kDeterministicWitnesses)
    if (!strong_probable_prime(n, Int(a), d, s)) return Primality::Composite;
  if (n < kDeterministicBound) return Primality::Prime;

  // Fixed-seed random bases keep the result reproducible run to run.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  unsigned bits = mp::msb(n);
  for (unsigned i = 0; i < kExtraBases; ++i) {
    Int a = 0;
    for (unsigned b = 0; b <= bits; b += 64) a = (a << 64) | Int(rng());
    a = a % (n - 3) + 2;  // a in [2, n-2]
    if (!strong_probable_prime(n, a, d, s)) return Primality::Composite;
  }
  return Primality::ProbablePrime;
}

std::optional<PrimePowerForm> prime_power_decompose(const Int& c) {
  if (c < 2) throw std::invalid_argument("prime_power_decompose: argument must be >= 2");
  // c = p^u forces u <= log2(c); scan exponents downward so the prime base
  // is hit directly.
  for (unsigned k = mp::msb(c) + 1; k >= 2; --k) {
    Int r = integer_kth_root(c, k);
    if (r < 2 || mp::pow(r, k) != c) continue;
    Primality pr = classify_prime(r);
    if (pr != Primality::Composite)
      return PrimePowerForm{r, k, pr == Primality::ProbablePrime};
  }
  Primality pr = classify_prime(c);
  if (pr != Primality::Composite)
    return PrimePowerForm{c, 1, pr == Primality::ProbablePrime};
  return std::nullopt;
}

}  // namespace polycert
