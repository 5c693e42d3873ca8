#include <polycert/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace polycert {

namespace {

// Dense representation; a runaway exponent would allocate that many
// coefficients, so cap it at desk scale.
constexpr std::size_t kMaxExponent = 1000000;

void trim_trailing_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int kZero = 0;

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim_trailing_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  trim_trailing_zeros(coeffs_);
}

const Int& Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  std::vector<Int> out(std::max(f.coeffs().size(), g.coeffs().size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.coefficient(i) + g.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& f) {
  std::vector<Int> out(f.coeffs());
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial{};
  std::vector<Int> out(f.coeffs().size() + g.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      out[i + j] += f.coeffs()[i] * g.coeffs()[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) { return multiply(f, g); }

Int evaluate_integer(const Polynomial& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

namespace {

class TermScanner {
 public:
  explicit TermScanner(std::string_view text) : text_(text) {}

  std::vector<Int> run() {
    std::vector<Int> coeffs;
    skip_ws();
    if (done()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' before '") + peek() + "'", pos_);
      }
      parse_term(sign, coeffs);
      first = false;
      skip_ws();
    }
    return coeffs;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int read_integer() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
      skip_ws();  // "1 0" reads as 10; the grammar ignores whitespace
    }
    return Int(digits);
  }

  void parse_term(int sign, std::vector<Int>& coeffs) {
    if (done()) throw ParseError("dangling sign", pos_);
    Int coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = read_integer();
      has_coef = true;
      if (!done() && peek() == '.')
        throw ParseError("floating-point literals are not accepted", pos_);
    }
    std::size_t exp = 0;
    if (!done() && peek() == 'x') {
      ++pos_;
      skip_ws();
      exp = 1;
      if (!done() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (!done() && peek() == '-') throw ParseError("negative exponent", pos_);
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected exponent digits after '^'", pos_);
        Int e = read_integer();
        if (e > kMaxExponent) throw ParseError("exponent too large", pos_);
        exp = e.convert_to<std::size_t>();
      }
    } else if (!has_coef) {
      throw ParseError(std::string("expected coefficient or 'x', got '") + peek() + "'", pos_);
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
    coeffs[exp] += sign * coef;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  return Polynomial(TermScanner(text).run());
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Int& c = f.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int mag = abs_int(c);
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      out << "x";
      if (i >= 2) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

SignNormalization normalize_sign(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("normalize_sign: zero polynomial");
  if (f.constant() == 0) return {f, true};
  return {f.constant() > 0 ? f : -f, false};
}

std::size_t lowest_nonconstant_index(const Polynomial& f) {
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i] != 0) return i;
  throw std::domain_error("constant polynomial has no nonconstant term");
}

Int abs_coeff_sum_above(const Polynomial& f, std::size_t m) {
  if (m < 1 || static_cast<int>(m) > f.degree())
    throw std::invalid_argument("abs_coeff_sum_above: index out of range");
  Int sum = 0;
  for (std::size_t i = m; i < f.coeffs().size(); ++i) sum += abs_int(f.coeffs()[i]);
  return sum;
}

}  // namespace polycert
