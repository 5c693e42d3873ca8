#ifndef POLYCERT_ROOTS_HPP
#define POLYCERT_ROOTS_HPP

#include <complex>
#include <vector>

#include <polycert/polynomial.hpp>

namespace polycert {

// Numeric roots with per-root certified residuals
// |f(z)| / (sum|a_j| * max(1,|z|)^n); one entry per degree.
struct RootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;
};

struct RootFindingOptions {
  double residual_threshold = 1e-10;
  int max_iterations = 200;
  // Perturbs the initial-guess angles; fixed default for reproducibility.
  unsigned long long seed = 20240915ULL;
};

// All complex roots by Aberth-Ehrlich simultaneous iteration (Durand-Kerner
// fallback on stall).  Throws std::runtime_error on non-convergence and
// std::domain_error for degree < 1 or coefficients at or above 2^1024.
RootSet numeric_roots(const Polynomial& f, const RootFindingOptions& opts = {});

double min_root_modulus(const RootSet& rs);
double min_root_modulus(const Polynomial& f, const RootFindingOptions& opts = {});

// Exact test |a_0| > |a_n| + ... + |a_1|, which pushes every root outside the
// unit circle.  Throws std::domain_error when the constant term is zero.
bool dominant_constant_holds(const Polynomial& f);

// Product of root moduli against |a_0 / a_n|, relative tolerance 1e-8.
bool vieta_product_check(const Polynomial& f, const RootSet& rs);
bool vieta_product_check(const Polynomial& f, const RootFindingOptions& opts = {});

}  // namespace polycert

#endif
