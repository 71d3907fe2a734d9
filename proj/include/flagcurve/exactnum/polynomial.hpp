#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagcurve/exactnum/rational.hpp"

namespace flagcurve::exact {

// Dense univariate polynomial over Q. The coefficient vector never carries a
// trailing zero, so the zero polynomial is the empty vector and degree() is -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial variable();
  // prod (t - r_i)
  static Polynomial from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign(evaluate(x)); }
  // Sign of p(x) as x -> +inf (positive) or -inf (negative = true).
  int sign_at_infinity(bool negative) const;

  Polynomial derivative() const;
  // p(-t)
  Polynomial reflected() const;
  // p(t + s)
  Polynomial shifted(const Rational& s) const;
  Polynomial monic() const;
  // Multiplicity of the root t = 0.
  int order_at_zero() const;
  // p / t^order_at_zero()
  Polynomial without_zero_root() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator+(Polynomial a, const Rational& c) { return a += constant(c); }
  friend Polynomial operator-(Polynomial a, const Rational& c) { return a -= constant(c); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
// Throws InvariantViolation if b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Yun decomposition: p = c * prod f_i^i with squarefree, pairwise coprime,
// monic f_i. Entry i-1 holds f_i (possibly the constant 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace flagcurve::exact
