#include <doctest.h>

#include <random>

#include <polycert/primality.hpp>

#include "support/oracles.hpp"

using namespace polycert;

TEST_SUITE("primality") {
  TEST_CASE("prime_power_decompose recognizes prime powers") {
    auto a = prime_power_decompose(16);
    REQUIRE(a.has_value());
    CHECK(a->prime == 2);
    CHECK(a->exponent == 4);
    CHECK_FALSE(a->probabilistic);

    auto b = prime_power_decompose(27);
    REQUIRE(b.has_value());
    CHECK(b->prime == 3);
    CHECK(b->exponent == 3);

    CHECK_FALSE(prime_power_decompose(12).has_value());
    CHECK_FALSE(prime_power_decompose(36).has_value());
    CHECK_FALSE(prime_power_decompose(3072).has_value());

    auto c = prime_power_decompose(2);
    REQUIRE(c.has_value());
    CHECK(c->prime == 2);
    CHECK(c->exponent == 1);

    auto d = prime_power_decompose(Int(1) << 64);
    REQUIRE(d.has_value());
    CHECK(d->prime == 2);
    CHECK(d->exponent == 64);

    Int big_prime("1000000007");
    auto e = prime_power_decompose(big_prime * big_prime);
    REQUIRE(e.has_value());
    CHECK(e->prime == big_prime);
    CHECK(e->exponent == 2);

    CHECK_THROWS_AS(prime_power_decompose(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_power_decompose(0), std::invalid_argument);
    CHECK_THROWS_AS(prime_power_decompose(-8), std::invalid_argument);
  }

  TEST_CASE("classify_prime agrees with trial division") {
    for (unsigned long long n = 0; n <= 20000; ++n) {
      CAPTURE(n);
      CHECK(is_prime(Int(n)) == oracles::trial_division_prime(n));
    }
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<unsigned long long> pick(2, 1000000000ULL);
    for (int trial = 0; trial < 500; ++trial) {
      unsigned long long n = pick(rng);
      CAPTURE(n);
      CHECK(is_prime(Int(n)) == oracles::trial_division_prime(n));
    }
  }

  TEST_CASE("strong pseudoprimes to small bases are still composite") {
    CHECK(classify_prime(Int(561)) == Primality::Composite);
    CHECK(classify_prime(Int("3215031751")) == Primality::Composite);
    CHECK(classify_prime(Int("25326001")) == Primality::Composite);
    CHECK(classify_prime(Int("3825123056546413051")) == Primality::Composite);
  }

  TEST_CASE("deterministic range reports Prime, beyond it ProbablePrime") {
    Int m61 = (Int(1) << 61) - 1;
    CHECK(classify_prime(m61) == Primality::Prime);

    Int m89 = (Int(1) << 89) - 1;
    CHECK(classify_prime(m89) == Primality::ProbablePrime);
    CHECK(classify_prime(m89 * 3) == Primality::Composite);
    CHECK(classify_prime(m89 * m89) == Primality::Composite);

    auto pp = prime_power_decompose(m89 * m89);
    REQUIRE(pp.has_value());
    CHECK(pp->prime == m89);
    CHECK(pp->exponent == 2);
    CHECK(pp->probabilistic);
  }

  TEST_CASE("classification is deterministic across calls") {
    Int m89 = (Int(1) << 89) - 1;
    for (int i = 0; i < 3; ++i) CHECK(classify_prime(m89) == Primality::ProbablePrime);
  }
}
