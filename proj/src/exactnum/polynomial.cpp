#include "flagcurve/exactnum/polynomial.hpp"

#include <sstream>

#include "flagcurve/errors.hpp"

namespace flagcurve::exact {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial p = constant(Rational(1));
  for (const Rational& r : roots) p = p * Polynomial{Rational(-r), Rational(1)};
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw UsageError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at_infinity(bool negative) const {
  if (is_zero()) return 0;
  int s = sign(leading());
  return (negative && degree() % 2 == 1) ? -s : s;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> r = coeffs_;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted(const Rational& s) const {
  // Horner in the ring: p(t+s) = (...(a_d (t+s) + a_{d-1})(t+s) + ...)
  Polynomial acc;
  const Polynomial lin{s, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial m = *this;
  const Rational inv = 1 / leading();
  return m *= inv;
}

int Polynomial::order_at_zero() const {
  if (is_zero()) throw UsageError("order at zero of the zero polynomial");
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Polynomial Polynomial::without_zero_root() const {
  const int k = order_at_zero();
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& a : coeffs_) a *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << exact::to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw UsageError("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.leading();
  auto bc = b.coefficients();
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InvariantViolation("inexact polynomial division");
  return qr.quotient;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("squarefree decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  const Polynomial dp = p.derivative();
  Polynomial a = gcd(p, dp);
  Polynomial b = exact_quotient(p.monic(), a);
  Polynomial c = exact_quotient(dp * (1 / p.leading()), a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial f = gcd(b, d);
    factors.push_back(f);
    b = exact_quotient(b, f);
    c = exact_quotient(d, f);
    d = c - b.derivative();
  }
  // Trailing constant factors carry no roots.
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace flagcurve::exact
