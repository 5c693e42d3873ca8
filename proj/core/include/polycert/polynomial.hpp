#ifndef POLYCERT_POLYNOMIAL_HPP
#define POLYCERT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <polycert/integer.hpp>

namespace polycert {

// Syntax error in polynomial text, with the offending position in the
// original input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Dense univariate polynomial over arbitrary-precision integers.
// coefficient(i) is the coefficient of x^i.  Canonical form: no trailing
// zero coefficients; the zero polynomial stores an empty vector.
// Immutable after construction; equality is coefficient-wise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^i; zero beyond the degree.
  const Int& coefficient(std::size_t i) const;
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  const Int& leading() const;
  const Int& constant() const { return coefficient(0); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Int> coeffs_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f);
Polynomial operator*(const Polynomial& f, const Polynomial& g);

// Exact convolution product.
Polynomial multiply(const Polynomial& f, const Polynomial& g);

// Exact Horner evaluation at an integer point.
Int evaluate_integer(const Polynomial& f, const Int& x);

// Parses the term grammar `[+|-] [coef] [x [^ exp]]`, whitespace-insensitive,
// coefficients of unbounded size, repeated exponents summed.
// Throws ParseError on malformed input or negative exponents.
Polynomial parse_polynomial(std::string_view text);

// Canonical text form; parse_polynomial(render(f)) == f.
std::string render(const Polynomial& f);

struct SignNormalization {
  Polynomial poly;
  // Set when the constant term is zero and no sign choice applies.
  bool zero_constant = false;
};

// Returns f or -f, whichever has a positive constant term.  A zero constant
// term leaves f unchanged and sets the flag.  Requires f nonzero.
SignNormalization normalize_sign(const Polynomial& f);

// Smallest index i >= 1 with a_i != 0.  Throws std::domain_error for
// constant polynomials.
std::size_t lowest_nonconstant_index(const Polynomial& f);

// Sum of |a_i| for i = m..degree(f).  Requires 1 <= m <= degree(f).
Int abs_coeff_sum_above(const Polynomial& f, std::size_t m);

}  // namespace polycert

#endif
