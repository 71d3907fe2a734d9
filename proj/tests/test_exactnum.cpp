#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/matrix.hpp"
#include "flagcurve/exactnum/roots.hpp"

using namespace flagcurve;
using namespace flagcurve::exact;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

const Polynomial t = Polynomial::variable();

// Laplace expansion along the first row, written independently of the
// library's determinant routines.
Polynomial laplace(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Polynomial term = m(0, j) * laplace(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Grid oracle: count distinct roots of p in (lo, hi] from sign changes of its
// squarefree part and exact zeros on a dyadic grid, refining until the count
// is stable for two consecutive refinements. Planted roots have denominators
// dividing 12, so a step below 1/24 already separates them.
std::size_t grid_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  const Polynomial sq = exact_quotient(p, gcd(p, p.derivative()));
  std::size_t previous = static_cast<std::size_t>(-1);
  int stable = 0;
  const long base = 24 * 64;
  for (int level = 0; level < 6; ++level) {
    const long steps = base << level;
    const Rational h = (hi - lo) / steps;
    std::size_t c = 0;
    int last = sq.sign_at(lo);
    for (long i = 1; i <= steps; ++i) {
      const int s = sq.sign_at(lo + h * i);
      if (s == 0) {
        ++c;
      } else if (last != 0 && s != last) {
        ++c;
      }
      last = s;
    }
    if (c == previous) {
      if (++stable == 2) return c;
    } else {
      stable = 0;
    }
    previous = c;
  }
  return previous;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-2") == q(-2));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("-1.5e-2") == q(-3, 200));
  CHECK(to_string(q(-4, 6)) == "-2/3");
  CHECK(to_decimal(q(1, 3), 4) == "0.3333");
  CHECK(to_decimal(q(-2, 3), 2) == "-0.67");
  CHECK(to_decimal(q(-1, 1000), 2) == "0.00");
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("abc"), UsageError);
}

TEST_CASE("polynomial arithmetic") {
  Polynomial p = t * t - Polynomial::constant(q(1));
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(q(3)) == q(8));
  CHECK(p.derivative() == Polynomial{q(0), q(2)});
  CHECK((p - p).is_zero());
  CHECK((t * t * t).order_at_zero() == 3);
  CHECK(p.shifted(q(1)) == t * t + q(2) * t);
  CHECK(p.reflected() == p);
  CHECK(t.reflected() == -t);

  DivMod qr = divmod(t * t * t + q(1), t + q(1));
  CHECK(qr.remainder.is_zero());
  CHECK(qr.quotient == t * t - t + q(1));
  CHECK_THROWS_AS(exact_quotient(t * t + q(1), t), InvariantViolation);
}

TEST_CASE("gcd and squarefree helpers") {
  std::vector<Rational> a{q(1), q(2)}, b{q(2), q(3)};
  CHECK(common_roots(Polynomial::from_roots(a), Polynomial::from_roots(b)));
  CHECK_FALSE(common_roots(t, t + q(1)));
  CHECK(is_squarefree(t * (t - q(1))));
  CHECK_FALSE(is_squarefree((t - q(1)) * (t - q(1))));
  CHECK(squarefree_part((t - q(1)) * (t - q(1)) * t) == t * (t - q(1)));

  // (t-1)(t-2)^2(t+3)^3
  Polynomial p = (t - q(1)) * (t - q(2)) * (t - q(2)) * (t + q(3)) * (t + q(3)) * (t + q(3));
  std::vector<Polynomial> yun = squarefree_decomposition(p * q(5));
  REQUIRE(yun.size() == 3);
  CHECK(yun[0] == t - q(1));
  CHECK(yun[1] == t - q(2));
  CHECK(yun[2] == t + q(3));
}

TEST_CASE("count_real_roots basic cases") {
  CHECK(count_real_roots(t * t - q(1), q(-2), q(2)) == 2);
  CHECK(count_real_roots(t * t, q(-1), q(1)) == 1);
  CHECK(count_real_roots(t * t + q(1)) == 0);
  // half-open (lo, hi]
  CHECK(count_real_roots(t * (t - q(1)), q(0), q(1)) == 1);
  CHECK(count_real_roots(t * (t - q(1)), q(-1), q(0)) == 1);
  CHECK_THROWS_WITH_AS(count_real_roots(Polynomial()), "identically zero polynomial", UsageError);
}

TEST_CASE("isolate_roots basic cases") {
  auto r = isolate_roots(t * (t - q(1)));
  REQUIRE(r.size() == 2);
  CHECK(r[0].contains(q(0)));
  CHECK(r[1].contains(q(1)));
  CHECK(r[0].multiplicity == 1);
  CHECK(r[0].hi <= r[1].lo);

  auto d = isolate_roots((t - q(1)) * (t - q(1)));
  REQUIRE(d.size() == 1);
  CHECK(d[0].contains(q(1)));
  CHECK(d[0].multiplicity == 2);

  auto refined = isolate_roots(t * t - q(2), q(1, 1000));
  REQUIRE(refined.size() == 2);
  CHECK(refined[1].width() < q(1, 1000));
  CHECK(refined[1].lo * refined[1].lo < q(2));
  CHECK(refined[1].hi * refined[1].hi > q(2));
  CHECK_THROWS_AS(isolate_roots(Polynomial()), UsageError);
}

TEST_CASE("isolation restricted to a half-open domain") {
  RealRootIsolator iso(t * (t - q(1)) * (t - q(2)));
  auto inside = iso.isolate(q(0), q(2));
  REQUIRE(inside.size() == 2);
  CHECK(inside[0].contains(q(1)));
  CHECK(inside[1].contains(q(2)));
  CHECK_FALSE(inside[0].contains(q(0)));
}

TEST_CASE("Sturm count agrees with a sign-change grid oracle on planted roots") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    const int planted = static_cast<int>(rng() % 7) + 1;
    std::vector<Rational> roots;
    std::vector<Rational> distinct;
    for (int i = 0; i < planted; ++i) {
      Rational r = q(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 4) + 1);
      roots.push_back(r);
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    }
    Polynomial p = Polynomial::from_roots(roots);
    if (rng() % 2 == 0) p = p * (t * t + q(static_cast<long>(rng() % 5) + 1, 3));  // no real roots
    p = p * q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 9) + 1);
    REQUIRE(p.degree() <= 10);
    const std::size_t sturm = count_real_roots(p);
    CHECK(sturm == distinct.size());
    CHECK(sturm <= static_cast<std::size_t>(p.degree()));
    CHECK(count_real_roots(p, q(-21), q(21)) == sturm);
    CHECK(grid_count(p, q(-21), q(21)) == sturm);

    // Multiplicities are recovered exactly and sum to the real-root degree.
    auto iso = isolate_roots(p);
    REQUIRE(iso.size() == distinct.size());
    int total = 0;
    for (const RootInterval& ri : iso) {
      int expected = 0;
      for (const Rational& r : roots) {
        if (ri.contains(r)) ++expected;
      }
      CHECK(ri.multiplicity == expected);
      total += ri.multiplicity;
    }
    CHECK(total == planted);
    for (std::size_t i = 1; i < iso.size(); ++i) CHECK(iso[i - 1].hi <= iso[i].lo);
  }
}

TEST_CASE("poly_det small cases") {
  PolyMatrix one(1, 1);
  one(0, 0) = t;
  CHECK(poly_det(one) == t);

  PolyMatrix uni(2, 2);
  uni(0, 0) = Polynomial::constant(q(1));
  uni(1, 0) = t;
  uni(1, 1) = Polynomial::constant(q(1));
  CHECK(poly_det(uni) == Polynomial::constant(q(1)));

  std::vector<std::size_t> rows{0, 1}, cols{0};
  CHECK_THROWS_AS(poly_det(uni, rows, cols), UsageError);
}

TEST_CASE("Bareiss agrees with Laplace expansion on random polynomial matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 4 == 0) continue;  // leave zeros to exercise pivoting
        std::vector<Rational> c;
        const int deg = static_cast<int>(rng() % 3);
        for (int d = 0; d <= deg; ++d) c.push_back(q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
        m(i, j) = Polynomial(c);
      }
    }
    CHECK(poly_det(m) == laplace(m));
  }
}

TEST_CASE("rational matrix helpers") {
  RationalMatrix m(3, 3);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 4;
  m(1, 1) = 2;
  m(2, 2) = 5;
  CHECK(determinant(m) == 0);
  CHECK(rank(m) == 2);
  CHECK_THROWS_AS(inverse(m), UsageError);
  m(1, 1) = 3;
  CHECK(determinant(m) == 10);
  CHECK(inverse(m) * m == identity_matrix(3));
}
