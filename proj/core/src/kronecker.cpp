#include <polycert/kronecker.hpp>

#include <algorithm>
#include <stdexcept>

namespace polycert {

namespace {

// Lexicographic on (degree, coefficients from the constant term up).
bool factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

struct DivisorList {
  std::vector<Int> divisors;  // positive, ascending
  bool complete = true;
};

// Positive divisors of |v| by trial division.  Values above limits.value_bound
// or lists longer than limits.divisor_cap come back incomplete.
DivisorList positive_divisors(const Int& v, const KroneckerLimits& limits) {
  DivisorList out;
  Int m = abs_int(v);
  out.complete = m <= limits.value_bound;
  // sqrt(value_bound) trial steps cover the complete case exactly.
  unsigned long long step_cap = integer_kth_root(limits.value_bound, 2)
                                    .convert_to<unsigned long long>();
  if (m <= std::numeric_limits<unsigned long long>::max()) {
    unsigned long long n = m.convert_to<unsigned long long>();
    for (unsigned long long d = 1; d <= step_cap && d * d <= n; ++d) {
      if (n % d != 0) continue;
      out.divisors.push_back(Int(d));
      if (d != n / d) out.divisors.push_back(Int(n / d));
    }
  } else {
    for (unsigned long long d = 1; d <= step_cap; ++d) {
      if (m % d != 0) continue;
      out.divisors.push_back(Int(d));
      Int q = m / d;
      if (q != d) out.divisors.push_back(q);
    }
  }
  std::sort(out.divisors.begin(), out.divisors.end());
  if (out.divisors.size() > limits.divisor_cap) {
    out.divisors.resize(limits.divisor_cap);
    out.complete = false;
  }
  return out;
}

// Sample points 0, 1, -1, 2, -2, ... keep |f(x_j)| small.
Int sample_point(std::size_t j) {
  if (j == 0) return 0;
  Int k((j + 1) / 2);
  return j % 2 == 1 ? k : -k;
}

// Enumerates divisor tuples for one candidate degree in canonical order
// (divisors ascending, + before -, last point fastest) and tests each
// integer interpolant for exact divisibility.  Prunes a partial tuple as
// soon as some divided difference is non-integral, which no integer
// polynomial through those values can produce.
class TupleSearch {
 public:
  TupleSearch(const Polynomial& f, std::size_t degree,
              const std::vector<Int>& points,
              const std::vector<std::vector<Int>>& signed_values)
      : f_(f), degree_(degree), points_(points), signed_values_(signed_values) {
    tableau_.resize(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) tableau_[k].resize(k + 1);
    // Newton basis: B_k = (x - x_0)...(x - x_{k-1})
    basis_.push_back(Polynomial{1});
    for (std::size_t k = 0; k < degree; ++k)
      basis_.push_back(multiply(basis_.back(), Polynomial({-points_[k], Int(1)})));
  }

  std::optional<std::pair<Polynomial, Polynomial>> run() { return descend(0); }

 private:
  std::optional<std::pair<Polynomial, Polynomial>> descend(std::size_t level) {
    for (const Int& value : signed_values_[level]) {
      if (!fill_row(level, value)) continue;
      if (level < degree_) {
        if (auto hit = descend(level + 1)) return hit;
        continue;
      }
      const Int& lead = tableau_[degree_][degree_];
      if (lead == 0) continue;  // degree < d: already covered at a lower d
      if (f_.leading() % lead != 0) continue;
      if (auto hit = try_candidate()) return hit;
    }
    return std::nullopt;
  }

  // Row k of the divided-difference tableau: t[k][i] = g[x_{k-i}..x_k].
  // Every entry of an integer interpolant is an integer.
  bool fill_row(std::size_t k, const Int& value) {
    tableau_[k][0] = value;
    for (std::size_t i = 1; i <= k; ++i) {
      Int num = tableau_[k][i - 1] - tableau_[k - 1][i - 1];
      Int den = points_[k] - points_[k - i];
      if (num % den != 0) return false;
      tableau_[k][i] = num / den;
    }
    return true;
  }

  std::optional<std::pair<Polynomial, Polynomial>> try_candidate() {
    Polynomial g;
    for (std::size_t k = 0; k <= degree_; ++k)
      g = g + multiply(Polynomial(std::vector<Int>{tableau_[k][k]}), basis_[k]);
    if (auto h = divide_exact(f_, g)) {
      if (g.leading() < 0) return std::make_pair(-g, -(*h));
      return std::make_pair(g, *h);
    }
    return std::nullopt;
  }

  const Polynomial& f_;
  std::size_t degree_;
  const std::vector<Int>& points_;
  const std::vector<std::vector<Int>>& signed_values_;
  std::vector<std::vector<Int>> tableau_;
  std::vector<Polynomial> basis_;
};

}  // namespace

FactorSearchResult kronecker_find_factor(const Polynomial& f, const KroneckerLimits& limits) {
  if (f.degree() < 2)
    throw std::invalid_argument("kronecker_find_factor: degree must be >= 2");
  if (f.constant() == 0)
    throw std::invalid_argument("kronecker_find_factor: zero constant term, split off x^k first");

  std::size_t half = static_cast<std::size_t>(f.degree()) / 2;
  std::size_t max_degree = limits.max_degree == 0 ? half : std::min(limits.max_degree, half);

  FactorSearchResult result;
  result.exhaustive = max_degree >= half;

  std::vector<Int> points;
  std::vector<Int> values;
  std::vector<std::vector<Int>> signed_values;

  for (std::size_t d = 1; d <= max_degree; ++d) {
    while (points.size() <= d) {
      std::size_t j = points.size();
      points.push_back(sample_point(j));
      values.push_back(evaluate_integer(f, points.back()));
      if (values.back() == 0) {
        // x_j is an integer root; peel the linear factor immediately.
        Polynomial linear({-points.back(), Int(1)});
        result.factors = std::make_pair(linear, *divide_exact(f, linear));
        return result;
      }
      DivisorList divs = positive_divisors(values.back(), limits);
      if (!divs.complete) result.exhaustive = false;
      std::vector<Int> signed_list;
      for (const Int& dv : divs.divisors) {
        signed_list.push_back(dv);
        // Sign at the first sample point is fixed: g and -g divide together,
        // so one orientation per pair suffices.
        if (j > 0) signed_list.push_back(-dv);
      }
      signed_values.push_back(std::move(signed_list));
    }
    TupleSearch search(f, d, points, signed_values);
    if (auto hit = search.run()) {
      result.factors = std::move(hit);
      return result;
    }
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return Polynomial{};
  if (f.degree() < g.degree()) return std::nullopt;

  std::vector<Int> rem = f.coeffs();
  std::size_t gd = static_cast<std::size_t>(g.degree());
  std::vector<Int> quot(rem.size() - gd, Int(0));
  for (std::size_t i = rem.size(); i-- > gd;) {
    if (rem[i] == 0) continue;
    if (rem[i] % g.leading() != 0) return std::nullopt;
    Int c = rem[i] / g.leading();
    quot[i - gd] = c;
    for (std::size_t j = 0; j <= gd; ++j) rem[i - gd + j] -= c * g.coeffs()[j];
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return Polynomial(std::move(quot));
}

namespace {

void factor_recursive(const Polynomial& f, const KroneckerLimits& limits,
                      std::vector<Polynomial>& out, bool& exhaustive) {
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  FactorSearchResult found = kronecker_find_factor(f, limits);
  if (!found.factors) {
    out.push_back(f);
    exhaustive = exhaustive && found.exhaustive;
    return;
  }
  factor_recursive(found.factors->first, limits, out, exhaustive);
  factor_recursive(found.factors->second, limits, out, exhaustive);
}

}  // namespace

Factorization full_factor(const Polynomial& f, const KroneckerLimits& limits) {
  if (f.degree() < 1) throw std::invalid_argument("full_factor: degree must be >= 1");

  Factorization result;
  result.limits = limits;

  Polynomial body = f;
  if (f.constant() == 0) {
    std::size_t k = 0;
    while (f.coefficient(k) == 0) ++k;
    std::vector<Int> shifted(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end());
    body = Polynomial(std::move(shifted));
    if (body.degree() == 0) {
      // pure monomial c*x^k: keep the content inside one linear factor
      for (std::size_t i = 1; i < k; ++i) result.factors.push_back(Polynomial({0, 1}));
      result.factors.push_back(Polynomial(std::vector<Int>{Int(0), body.constant()}));
      body = Polynomial{};
    } else {
      for (std::size_t i = 0; i < k; ++i) result.factors.push_back(Polynomial({0, 1}));
    }
  }
  if (!body.is_zero()) {
    if (body.degree() == 0) {
      throw std::invalid_argument("full_factor: constant polynomial");
    }
    factor_recursive(body, limits, result.factors, result.exhaustive);
  }

  for (auto& factor : result.factors) {
    if (factor.leading() < 0) {
      factor = -factor;
      result.unit = -result.unit;
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  return result;
}

}  // namespace polycert
