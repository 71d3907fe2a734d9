#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagcurve/exactnum/polynomial.hpp"

namespace flagcurve::exact {

// An open interval (lo, hi) holding exactly one distinct real root of the
// polynomial it was produced for. Endpoints are never roots.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo < x && x < hi; }
  bool overlaps(const RootInterval& o) const { return lo < o.hi && o.lo < hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

using Bound = std::optional<Rational>;  // nullopt = infinite

// Sturm-sequence machinery for one nonzero polynomial. Counting and isolation
// work on the squarefree part; multiplicities come from the Yun factors.
class RealRootIsolator {
 public:
  explicit RealRootIsolator(const Polynomial& p);

  const Polynomial& polynomial() const { return poly_; }
  const Polynomial& squarefree() const { return squarefree_; }

  // Distinct real roots in (lo, hi].
  std::size_t count(const Bound& lo = {}, const Bound& hi = {}) const;

  // Ordered isolating intervals for the distinct roots in (lo, hi].
  std::vector<RootInterval> isolate(const Bound& lo = {}, const Bound& hi = {}) const;

  // Halves the interval once, keeping the root inside.
  void bisect(RootInterval& root) const;
  void refine(RootInterval& root, const Rational& max_width) const;

  int multiplicity(const RootInterval& root) const;

 private:
  int variations(const Rational& x) const;
  int variations_at_infinity(bool negative) const;
  // A point strictly inside (lo, hi) where the squarefree part does not vanish.
  Rational split_point(const Rational& lo, const Rational& hi) const;
  void isolate_into(const Rational& lo, const Rational& hi, std::size_t n, std::vector<RootInterval>& out) const;

  Polynomial poly_;
  Polynomial squarefree_;
  std::vector<Polynomial> chain_;
  std::vector<Polynomial> yun_;
};

// Bound B with every real root in (-B, B).
Rational cauchy_bound(const Polynomial& p);

// Distinct real roots in (lo, hi]; UsageError("identically zero") for p = 0.
std::size_t count_real_roots(const Polynomial& p, const Bound& lo = {}, const Bound& hi = {});

// One interval per distinct real root, strictly ordered, with multiplicity.
// When max_width is given every interval is refined below it.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const std::optional<Rational>& max_width = {});

bool is_squarefree(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);
// True when gcd(p, q) has positive degree (a common complex root).
bool common_roots(const Polynomial& p, const Polynomial& q);
// Number of distinct common real roots in (lo, hi].
std::size_t common_real_roots(const Polynomial& p, const Polynomial& q, const Bound& lo = {}, const Bound& hi = {});

}  // namespace flagcurve::exact

namespace flagcurve::exact {

// A root of one polynomial out of a family, tagged with the owner's index.
struct TaggedRoot {
  RootInterval root;
  std::size_t owner = 0;
};

// Refines the intervals of roots belonging to different polynomials until
// they are pairwise disjoint, then orders them. Roots shared between owners
// must have been ruled out beforehand (InvariantViolation after `max_rounds`).
std::vector<TaggedRoot> merge_roots(const std::vector<RealRootIsolator>& isolators, std::vector<TaggedRoot> roots,
                                    int max_rounds = 4096);

}  // namespace flagcurve::exact
