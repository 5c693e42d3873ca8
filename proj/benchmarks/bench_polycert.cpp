#include <benchmark/benchmark.h>

#include <random>

#include <polycert/criteria.hpp>
#include <polycert/kronecker.hpp>
#include <polycert/newton_polygon.hpp>
#include <polycert/roots.hpp>

using namespace polycert;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree, long long bound) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::vector<Int> cs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : cs) c = coeff(rng);
  while (cs.back() == 0) cs.back() = coeff(rng);
  while (cs.front() == 0) cs.front() = coeff(rng);
  return Polynomial(std::move(cs));
}

void bm_multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Polynomial f = random_poly(rng, static_cast<int>(state.range(0)), 1000000);
  Polynomial g = random_poly(rng, static_cast<int>(state.range(0)), 1000000);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
}
BENCHMARK(bm_multiply)->Arg(8)->Arg(32)->Arg(128);

void bm_parse_render(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::string text = render(random_poly(rng, 24, 1000000000));
  for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial(text));
}
BENCHMARK(bm_parse_render);

void bm_newton_polygon(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> exp(0, 12);
  std::uniform_int_distribution<long long> base(1, 9);
  Int p(2);
  std::vector<Int> cs(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& c : cs) c = Int(base(rng)) * boost::multiprecision::pow(p, exp(rng));
  Polynomial f{std::move(cs)};
  for (auto _ : state) benchmark::DoNotOptimize(newton_polygon(f, p));
}
BENCHMARK(bm_newton_polygon)->Arg(16)->Arg(64)->Arg(256);

void bm_check_all(benchmark::State& state) {
  Polynomial f = parse_polynomial("3x^5 + x^3 + 9");
  for (auto _ : state) benchmark::DoNotOptimize(check_all(f));
}
BENCHMARK(bm_check_all);

void bm_prime_power_decompose(benchmark::State& state) {
  Int c = boost::multiprecision::pow(Int(1000000007), 3);
  for (auto _ : state) benchmark::DoNotOptimize(prime_power_decompose(c));
}
BENCHMARK(bm_prime_power_decompose);

void bm_kronecker_quartic(benchmark::State& state) {
  Polynomial f = multiply(Polynomial{8, 1, 1}, Polynomial{8, -1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(full_factor(f));
}
BENCHMARK(bm_kronecker_quartic);

void bm_kronecker_irreducible(benchmark::State& state) {
  Polynomial f = parse_polynomial("x^5 + x^3 + 32");
  for (auto _ : state) benchmark::DoNotOptimize(full_factor(f));
}
BENCHMARK(bm_kronecker_irreducible);

void bm_numeric_roots(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Polynomial f = random_poly(rng, static_cast<int>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(numeric_roots(f));
}
BENCHMARK(bm_numeric_roots)->Arg(4)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
