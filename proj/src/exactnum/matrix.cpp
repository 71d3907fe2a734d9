#include "flagcurve/exactnum/matrix.hpp"

#include <sstream>
#include <utility>

#include "flagcurve/errors.hpp"

namespace flagcurve::exact {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("matrix sum dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  }
  return c;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw UsageError("matrix is singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(pivot, j));
        std::swap(inv(k, j), inv(pivot, j));
      }
    }
    const Rational p = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

PolyMatrix to_poly(const RationalMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Polynomial::constant(m(i, j));
  }
  return p;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

PolyMatrix operator*(const PolyMatrix& a, const RationalMatrix& b) { return a * to_poly(b); }
PolyMatrix operator*(const RationalMatrix& a, const PolyMatrix& b) { return to_poly(a) * b; }

RationalMatrix evaluate(const PolyMatrix& m, const Rational& t) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(t);
  }
  return r;
}

PolyMatrix derivative(const PolyMatrix& m) {
  PolyMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).derivative();
  }
  return d;
}

PolyMatrix reflected(const PolyMatrix& m) {
  PolyMatrix d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).reflected();
  }
  return d;
}

namespace {

Polynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(Rational(1));
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial det;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != j) cols.push_back(c);
    }
    Polynomial term = m(0, j) * cofactor_det(m.submatrix(rows, cols));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Polynomial bareiss_det(PolyMatrix a) {
  const std::size_t n = a.rows();
  Polynomial prev = Polynomial::constant(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_quotient(num, prev);
      }
    }
    prev = a(k, k);
  }
  return negate ? Polynomial(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

}  // namespace

Polynomial poly_det(const PolyMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant of a non-square selection");
  if (m.rows() <= 3) return cofactor_det(m);
  return bareiss_det(m);
}

Polynomial poly_det(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw UsageError("determinant of a non-square selection");
  for (std::size_t r : rows) {
    if (r >= m.rows()) throw UsageError("row index out of range");
  }
  for (std::size_t c : cols) {
    if (c >= m.cols()) throw UsageError("column index out of range");
  }
  return poly_det(m.submatrix(rows, cols));
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
    out << "]\n";
  }
  return out.str();
}

}  // namespace flagcurve::exact
