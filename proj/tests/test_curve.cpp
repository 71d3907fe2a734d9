#include <random>

#include "doctest.h"
#include "flagcurve/curve/curve.hpp"
#include "flagcurve/curve/duality.hpp"
#include "flagcurve/curve/extension.hpp"
#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/roots.hpp"
#include "support.hpp"

using namespace flagcurve;
using namespace flagcurve::curve;
using namespace testsupport;

namespace {

const Polynomial t = Polynomial::variable();

// exp(tN) by summing (tN)^m / m! with plain matrix products.
PolyMatrix series_exp(const NilpotentGenerator& g) {
  const std::size_t n = g.n();
  PolyMatrix tn(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) tn(j + 1, j) = t * g.subdiag()[j];
  PolyMatrix sum = exact::to_poly(exact::identity_matrix(n));
  PolyMatrix power = sum;
  for (std::size_t m = 1; m < n; ++m) {
    power = power * tn;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) power(i, j) *= Rational(1, static_cast<unsigned long>(m));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += power(i, j);
    }
  }
  return sum;
}

std::vector<exact::RootInterval> roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  exact::RealRootIsolator iso(p);
  auto roots = iso.isolate(lo, hi);
  for (auto& r : roots) iso.refine(r, q(1, 1000));
  return roots;
}

}  // namespace

TEST_CASE("exp_nilpotent matches the truncated series") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto unit = NilpotentGenerator::unit(n);
    const PolyMatrix e = exp_nilpotent(unit);
    for (std::size_t i = 0; i < n; ++i) {
      Rational fact = 1;
      for (std::size_t j = i + 1; j-- > 0;) {
        CHECK(e(i, j) == Polynomial::monomial(1 / fact, static_cast<int>(i - j)));
        fact *= static_cast<long>(i - j + 1);
      }
    }
    CHECK(exact::evaluate(e, 0) == exact::identity_matrix(n));
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = random_generator(rng, n);
      CHECK(exp_nilpotent(g) == series_exp(g));
    }
  }
  const PolyMatrix e3 = exp_nilpotent(NilpotentGenerator({q(2), q(3)}));
  CHECK(e3(2, 0) == Polynomial::monomial(q(3), 2));
}

TEST_CASE("nilpotent generators reject non-positive entries") {
  CHECK_THROWS_AS(NilpotentGenerator({q(1), q(0)}), UsageError);
  CHECK_THROWS_AS(NilpotentGenerator({q(-1, 2)}), UsageError);
}

TEST_CASE("make_curve caches L0 exp(tN0) and validates shapes") {
  const auto unit = NilpotentGenerator::unit(4);
  CHECK(make_curve(exact::identity_matrix(4), unit).gamma() == exp_nilpotent(unit));

  const PolynomialCurve c = sample_curve_n4();
  CHECK(c.gamma()(2, 0) == Polynomial{q(1, 6), q(0), q(1, 2)});
  CHECK(c.is_flag_convex());

  CHECK_THROWS_AS(make_curve(exact::identity_matrix(3), unit), UsageError);
  RationalMatrix bad = sample_l0_n4();
  bad(3, 3) = 0;
  CHECK_THROWS_AS(make_curve(bad, unit), UsageError);
}

TEST_CASE("minor degrees, leading signs and flag-convexity on random curves") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const PolynomialCurve c(random_lower_uni(rng, n), random_generator(rng, n));
      CHECK(c.is_flag_convex());
      const PolynomialCurve e(exact::identity_matrix(n), c.n0());
      for (std::size_t k = 1; k < n; ++k) {
        const Polynomial m = minor_k(c, k);
        CHECK(m.degree() == static_cast<int>(k * (n - k)));
        CHECK(m.leading() > 0);
        CHECK(m.leading() == minor_k(e, k).leading());
      }
      const ProjectedCurve pc = project(c);
      if (n >= 3) CHECK(minor_pair(pc, 1, 2) == minor_k(c, 2));
      CHECK(pc.rows(0, n - 2) == Polynomial::constant(1));
      CHECK(pc.rows(1, n - 1) == Polynomial::constant(1));
      CHECK(pc.rows(0, n - 1).is_zero());
    }
  }
  CHECK_THROWS_AS(minor_k(sample_curve_n4(), 0), UsageError);
  CHECK_THROWS_AS(minor_k(sample_curve_n4(), 4), UsageError);
  CHECK_THROWS_AS(minor_pair(project(sample_curve_n4()), 3, 2), UsageError);
}

TEST_CASE("small minors by hand") {
  const PolynomialCurve c2(exact::identity_matrix(2), NilpotentGenerator::unit(2));
  CHECK(minor_k(c2, 1) == t);
  const PolynomialCurve c4(exact::identity_matrix(4), NilpotentGenerator::unit(4));
  CHECK(minor_pair(project(c4), 3, 4).evaluate(0) == 1);
}

TEST_CASE("sample n=4 curve: root locations of m_2 and m_Y") {
  const PolynomialCurve c = sample_curve_n4();
  const ProjectedCurve pc = project(c);
  const Polynomial m2 = minor_k(c, 2);
  CHECK(m2.degree() == 4);
  CHECK(exact::count_real_roots(m2) == 2);
  CHECK(exact::count_real_roots(m2, q(-1), q(3, 2)) == 2);
  const auto r2 = roots_in(m2, q(-1), q(3, 2));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].lo > q(25, 100));
  CHECK(r2[0].hi < q(27, 100));
  CHECK(r2[1].lo > q(110, 100));
  CHECK(r2[1].hi < q(112, 100));

  const auto r23 = roots_in(minor_pair(pc, 2, 3), q(-1), q(3, 2));
  REQUIRE(r23.size() == 2);
  CHECK(r23[0].lo > q(-64, 100));
  CHECK(r23[0].hi < q(-62, 100));
  CHECK(r23[1].lo > q(62, 100));
  CHECK(r23[1].hi < q(64, 100));
  CHECK(minor_pair(pc, 2, 4).evaluate(0) == 0);
}

TEST_CASE("total positivity") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const RationalMatrix ref = exp_at(NilpotentGenerator::unit(n), q(1));
    CHECK(is_totally_positive(ref));
    CHECK(is_totally_negative(exp_at(NilpotentGenerator::unit(n), q(-1))));
    CHECK_FALSE(is_totally_positive(exact::identity_matrix(n)));
    CHECK_FALSE(is_totally_negative(exact::identity_matrix(n)));
  }
  // A single generator factor only lives on the boundary of Pos.
  RationalMatrix lam = exact::identity_matrix(3);
  lam(1, 0) = 1;
  CHECK_FALSE(is_totally_positive(lam));
}

TEST_CASE("Neg <=> Pos(PLP), never both (1000 samples per n)") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 2; n <= 6; ++n) {
    int pos = 0;
    int neg = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      RationalMatrix l;
      switch (trial % 3) {
        case 0: l = random_lower_uni(rng, n); break;
        case 1: l = random_lower_uni(rng, n, 1, 8) * exp_at(random_generator(rng, n), q(draw(rng, 1, 64))); break;
        default: l = random_lower_uni(rng, n, 1, 8) * exp_at(random_generator(rng, n), q(-draw(rng, 1, 64))); break;
      }
      const bool p = is_totally_positive(l);
      const bool m = is_totally_negative(l);
      CHECK_FALSE((p && m));
      CHECK(m == is_totally_positive(sign_conjugate(l)));
      pos += p;
      neg += m;
    }
    // Both classes must actually be exercised.
    CHECK(pos > 0);
    CHECK(neg > 0);
  }
}

TEST_CASE("positivity thresholds") {
  const auto th_id = positivity_thresholds(exact::identity_matrix(4), NilpotentGenerator::unit(4));
  CHECK(th_id.t_plus == 1);
  CHECK(th_id.t_minus == -1);

  const PolynomialCurve c = sample_curve_n4();
  const auto th = positivity_thresholds(c.l0(), c.n0());
  const auto r2 = roots_in(minor_k(c, 2), q(-10), q(10));
  CHECK(th.t_plus > r2.back().hi);
  CHECK(is_totally_positive(c.at(th.t_plus)));
  CHECK(is_totally_negative(c.at(th.t_minus)));

  std::mt19937_64 rng(14);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const RationalMatrix g = random_lower_uni(rng, n);
      const auto gen = random_generator(rng, n);
      const auto r = positivity_thresholds(g, gen);
      CHECK(r.t_minus < 0);
      CHECK(r.t_plus > 0);
      CHECK(is_totally_positive(g * exp_at(gen, r.t_plus)));
      CHECK(is_totally_negative(g * exp_at(gen, r.t_minus)));
    }
  }
}

TEST_CASE("curve extension") {
  const PolynomialCurve id(exact::identity_matrix(4), NilpotentGenerator::unit(4));
  const ExtendedCurve e = extend_curve(id, q(0), q(0));
  CHECK(e.a() == -1);
  CHECK(e.b() == 1);
  CHECK(is_totally_negative(e.at(e.a())));
  CHECK(is_totally_positive(e.at(e.b())));

  const PolynomialCurve c = sample_curve_n4();
  const ExtendedCurve x = extend_curve(c, q(-1), q(3, 2));
  CHECK(x.a() <= -1);
  CHECK(x.b() >= q(3, 2));
  CHECK(is_totally_negative(x.at(x.a())));
  CHECK(is_totally_positive(x.at(x.b())));
  // Continuity at the joins.
  for (std::size_t i = 0; i + 1 < x.pieces.size(); ++i) {
    CHECK(x.pieces[i].curve.at(x.pieces[i].hi) == x.pieces[i + 1].curve.at(x.pieces[i + 1].lo));
    CHECK(x.pieces[i].hi == x.pieces[i + 1].lo);
  }
  for (const auto& p : x.pieces) CHECK(p.curve.is_flag_convex());

  // Already Pos at f: no tail on the right.
  const ExtendedCurve y = extend_curve(id, q(-2), q(2));
  CHECK(y.b() == 2);
  CHECK(y.a() == -2);
  CHECK(y.pieces.size() == 1);
  CHECK_THROWS_AS(extend_curve(id, q(1), q(0)), UsageError);
}

TEST_CASE("duality") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const PolynomialCurve unit(exact::identity_matrix(n), NilpotentGenerator::unit(n));
    const PolynomialCurve d = dual_curve(unit);
    CHECK(d.is_flag_convex());
    CHECK(d.n0() == NilpotentGenerator::unit(n));
    for (std::size_t k = 1; k < n; ++k) CHECK(reference_duality_sign(n, k) != 0);
  }
  const PolynomialCurve c = sample_curve_n4();
  CHECK(duality_sign(c, 2) != 0);
  CHECK(duality_sign(c, 2) == reference_duality_sign(4, 2));

  std::mt19937_64 rng(15);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const PolynomialCurve r(random_lower_uni(rng, n), random_generator(rng, n));
      const PolynomialCurve d = dual_curve(r);
      CHECK(d.is_flag_convex());
      // The closed form agrees with P_eta Gamma(-t)^{-T} P_eta pointwise.
      const Rational s = random_rational(rng, 5, 3);
      const RationalMatrix inv_t = exact::inverse(r.at(-s)).transposed();
      RationalMatrix flipped(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) flipped(i, j) = inv_t(n - 1 - i, n - 1 - j);
      }
      CHECK(d.at(s) == flipped);
      for (std::size_t k = 1; k < n; ++k) CHECK(duality_sign(r, k) == reference_duality_sign(n, k));
      const PolynomialCurve dd = dual_curve(d);
      CHECK(dd.l0() == r.l0());
      CHECK(dd.n0() == r.n0());
    }
  }
}
