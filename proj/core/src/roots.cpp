#include <polycert/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace polycert {

namespace {

using Complex = std::complex<double>;

double to_double_guarded(const Int& v) {
  if (v != 0 && boost::multiprecision::msb(abs_int(v)) >= 1024)
    throw std::domain_error("numeric_roots: coefficient magnitude >= 2^1024");
  return v.convert_to<double>();
}

struct NumericPoly {
  std::vector<double> c;  // c[i] multiplies x^i, c.back() != 0
  double abs_sum = 0;

  Complex eval(Complex z) const {
    Complex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  }
  Complex eval_derivative(Complex z) const {
    Complex acc = 0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + c[i] * double(i);
    return acc;
  }
  double residual(Complex z) const {
    double scale = abs_sum * std::pow(std::max(1.0, std::abs(z)), double(c.size() - 1));
    return std::abs(eval(z)) / scale;
  }
};

std::vector<Complex> initial_guesses(const NumericPoly& p, std::size_t n,
                                     unsigned long long seed) {
  double max_ratio = 0;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i)
    max_ratio = std::max(max_ratio, std::abs(p.c[i] / p.c.back()));
  double radius = 1.0 + max_ratio;  // Cauchy bound
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    // offset keeps guesses off the real axis and off symmetric positions
    double angle = 2.0 * std::numbers::pi * (double(i) + 0.35) / double(n) + jitter(rng);
    z[i] = std::polar(radius, angle);
  }
  return z;
}

bool all_residuals_pass(const NumericPoly& p, const std::vector<Complex>& z,
                        double threshold) {
  return std::all_of(z.begin(), z.end(),
                     [&](Complex zi) { return p.residual(zi) < threshold; });
}

// One Aberth-Ehrlich sweep; returns the largest correction applied.
double aberth_sweep(const NumericPoly& p, std::vector<Complex>& z) {
  double worst = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex fz = p.eval(z[i]);
    if (fz == Complex(0)) continue;
    Complex dfz = p.eval_derivative(z[i]);
    Complex newton = dfz == Complex(0) ? Complex(0) : fz / dfz;
    Complex repulsion = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      Complex diff = z[i] - z[j];
      if (diff == Complex(0)) diff = Complex(1e-12, 1e-12);
      repulsion += 1.0 / diff;
    }
    Complex w;
    if (newton == Complex(0)) {
      // derivative vanished; nudge off the stationary point
      w = Complex(1e-8, 1e-8);
    } else {
      Complex denom = 1.0 - newton * repulsion;
      w = denom == Complex(0) ? newton : newton / denom;
    }
    z[i] -= w;
    worst = std::max(worst, std::abs(w));
  }
  return worst;
}

double durand_kerner_sweep(const NumericPoly& p, std::vector<Complex>& z) {
  double lead = p.c.back();
  double worst = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex denom = lead;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      Complex diff = z[i] - z[j];
      if (diff == Complex(0)) diff = Complex(1e-12, 1e-12);
      denom *= diff;
    }
    Complex w = p.eval(z[i]) / denom;
    z[i] -= w;
    worst = std::max(worst, std::abs(w));
  }
  return worst;
}

// Pair near-conjugate roots of a real polynomial exactly; keep the result
// only when it does not hurt any residual certificate.
void symmetrize_conjugates(const NumericPoly& p, std::vector<Complex>& z,
                           double threshold) {
  std::vector<Complex> adjusted = z;
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < adjusted.size(); ++i) {
    if (used[i]) continue;
    if (std::abs(adjusted[i].imag()) < 1e-14) {
      adjusted[i] = Complex(adjusted[i].real(), 0.0);
      used[i] = true;
      continue;
    }
    std::size_t best = adjusted.size();
    double best_dist = 1e-6 * (1.0 + std::abs(adjusted[i]));
    for (std::size_t j = i + 1; j < adjusted.size(); ++j) {
      if (used[j]) continue;
      double dist = std::abs(std::conj(adjusted[i]) - adjusted[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == adjusted.size()) continue;
    Complex mean = (adjusted[i] + std::conj(adjusted[best])) / 2.0;
    adjusted[i] = mean;
    adjusted[best] = std::conj(mean);
    used[i] = used[best] = true;
  }
  if (all_residuals_pass(p, adjusted, threshold)) z = adjusted;
}

}  // namespace

RootSet numeric_roots(const Polynomial& f, const RootFindingOptions& opts) {
  if (f.degree() < 1) throw std::domain_error("numeric_roots: degree must be >= 1");

  // Roots at the origin split off exactly.
  std::size_t zeros = 0;
  while (f.coefficient(zeros) == 0) ++zeros;

  NumericPoly p;
  for (std::size_t i = zeros; i < f.coeffs().size(); ++i)
    p.c.push_back(to_double_guarded(f.coeffs()[i]));
  for (double ci : p.c) p.abs_sum += std::abs(ci);

  std::vector<std::pair<Complex, double>> found(zeros, {Complex(0, 0), 0.0});

  std::size_t n = p.c.size() - 1;
  if (n > 0) {
    std::vector<Complex> z = initial_guesses(p, n, opts.seed);
    bool converged = false;
    double prev_worst = std::numeric_limits<double>::max();
    int stalled = 0;
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
      double worst = aberth_sweep(p, z);
      if (all_residuals_pass(p, z, opts.residual_threshold)) {
        converged = true;
        break;
      }
      if (worst >= prev_worst * 0.99) {
        if (++stalled >= 8) break;
      } else {
        stalled = 0;
      }
      prev_worst = worst;
    }
    if (!converged) {
      // restart with Durand-Kerner from fresh guesses
      z = initial_guesses(p, n, opts.seed ^ 0x5bd1e995ULL);
      for (int iter = 0; iter < opts.max_iterations; ++iter) {
        durand_kerner_sweep(p, z);
        if (all_residuals_pass(p, z, opts.residual_threshold)) {
          converged = true;
          break;
        }
      }
    }
    if (!converged)
      throw std::runtime_error("numeric_roots: no residual-certified convergence within iteration cap");

    symmetrize_conjugates(p, z, opts.residual_threshold);
    for (Complex zi : z) found.emplace_back(zi, p.residual(zi));
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first.real() != b.first.real() ? a.first.real() < b.first.real()
                                            : a.first.imag() < b.first.imag();
  });
  RootSet rs;
  for (const auto& [root, residual] : found) {
    rs.roots.push_back(root);
    rs.residuals.push_back(residual);
  }
  return rs;
}

double min_root_modulus(const RootSet& rs) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex z : rs.roots) best = std::min(best, std::abs(z));
  return best;
}

double min_root_modulus(const Polynomial& f, const RootFindingOptions& opts) {
  return min_root_modulus(numeric_roots(f, opts));
}

bool dominant_constant_holds(const Polynomial& f) {
  if (f.is_zero() || f.constant() == 0)
    throw std::domain_error("dominant_constant_holds: zero constant term");
  if (f.degree() == 0) return true;
  return abs_int(f.constant()) > abs_coeff_sum_above(f, 1);
}

bool vieta_product_check(const Polynomial& f, const RootSet& rs) {
  double product = 1.0;
  for (Complex z : rs.roots) product *= std::abs(z);
  double expected = std::abs(to_double_guarded(f.constant()) / to_double_guarded(f.leading()));
  if (expected == 0.0) return product == 0.0;
  return std::abs(product - expected) <= 1e-8 * expected;
}

bool vieta_product_check(const Polynomial& f, const RootFindingOptions& opts) {
  return vieta_product_check(f, numeric_roots(f, opts));
}

}  // namespace polycert
