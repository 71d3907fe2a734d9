#include "flagcurve/exactnum/roots.hpp"

#include <algorithm>

#include "flagcurve/errors.hpp"

namespace flagcurve::exact {

namespace {

void require_nonzero(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("identically zero polynomial");
}

// Positive rescaling keeps every sign the chain needs while bounding growth.
Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / abs(p.leading()));
}

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

RealRootIsolator::RealRootIsolator(const Polynomial& p) : poly_(p) {
  require_nonzero(p);
  if (p.degree() == 0) {
    squarefree_ = Polynomial::constant(Rational(1));
  } else {
    squarefree_ = normalized(exact_quotient(p, gcd(p, p.derivative())));
    yun_ = squarefree_decomposition(p);
  }
  chain_.push_back(squarefree_);
  if (squarefree_.degree() > 0) {
    chain_.push_back(normalized(squarefree_.derivative()));
    while (chain_.back().degree() > 0) {
      Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
      if (r.is_zero()) break;
      chain_.push_back(normalized(-r));
    }
  }
}

int RealRootIsolator::variations(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const Polynomial& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int RealRootIsolator::variations_at_infinity(bool negative) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const Polynomial& q : chain_) signs.push_back(q.sign_at_infinity(negative));
  return count_variations(signs);
}

std::size_t RealRootIsolator::count(const Bound& lo, const Bound& hi) const {
  if (lo && hi && !(*lo < *hi)) return 0;
  const int vlo = lo ? variations(*lo) : variations_at_infinity(true);
  const int vhi = hi ? variations(*hi) : variations_at_infinity(false);
  return static_cast<std::size_t>(vlo - vhi);
}

Rational RealRootIsolator::split_point(const Rational& lo, const Rational& hi) const {
  Rational mid = (lo + hi) / 2;
  if (squarefree_.sign_at(mid) != 0) return mid;
  // The squarefree part has finitely many roots; nudging toward hi by
  // shrinking fractions of the half-width must eventually miss them all.
  Rational step = (hi - lo) / 4;
  for (int i = 0; i < 256; ++i) {
    Rational x = mid + step;
    if (squarefree_.sign_at(x) != 0) return x;
    step /= 3;
  }
  throw InvariantViolation("no non-root split point found");
}

void RealRootIsolator::isolate_into(const Rational& lo, const Rational& hi, std::size_t n,
                                    std::vector<RootInterval>& out) const {
  if (n == 0) return;
  if (n == 1) {
    RootInterval r{lo, hi, 1};
    r.multiplicity = multiplicity(r);
    out.push_back(r);
    return;
  }
  const Rational mid = split_point(lo, hi);
  const std::size_t left = count(lo, mid);
  isolate_into(lo, mid, left, out);
  isolate_into(mid, hi, n - left, out);
}

std::vector<RootInterval> RealRootIsolator::isolate(const Bound& lo_in, const Bound& hi_in) const {
  std::vector<RootInterval> out;
  if (squarefree_.degree() < 1) return out;
  const Rational bound = cauchy_bound(squarefree_);
  Rational lo = lo_in ? *lo_in : Rational(-bound);
  Rational hi = hi_in ? *hi_in : bound;
  if (!(lo < hi)) return out;

  // A root sitting exactly on lo is excluded by the half-open convention;
  // move lo right past it without passing any other root.
  if (squarefree_.sign_at(lo) == 0) {
    Rational delta = (hi - lo) / 2;
    while (squarefree_.sign_at(lo + delta) == 0 || count(lo, lo + delta) != 0) delta /= 2;
    lo += delta;
  }
  // A root on hi is included; isolate it with a symmetric interval.
  std::optional<RootInterval> at_hi;
  if (squarefree_.sign_at(hi) == 0) {
    Rational delta = (hi - lo) / 2;
    while (squarefree_.sign_at(hi - delta) == 0 || squarefree_.sign_at(hi + delta) == 0 ||
           count(hi - delta, hi + delta) != 1) {
      delta /= 2;
    }
    RootInterval r{hi - delta, hi + delta, 1};
    r.multiplicity = multiplicity(r);
    at_hi = r;
    hi -= delta;
  }
  isolate_into(lo, hi, count(lo, hi), out);
  if (at_hi) out.push_back(*at_hi);
  return out;
}

void RealRootIsolator::bisect(RootInterval& root) const {
  const int slo = squarefree_.sign_at(root.lo);
  Rational mid = root.midpoint();
  const int smid = squarefree_.sign_at(mid);
  if (smid == 0) {
    // The root is exactly the midpoint: keep it centred in a half-width interval.
    const Rational quarter = root.width() / 4;
    root.lo = mid - quarter;
    root.hi = mid + quarter;
    return;
  }
  if (smid == slo) {
    root.lo = mid;
  } else {
    root.hi = mid;
  }
}

void RealRootIsolator::refine(RootInterval& root, const Rational& max_width) const {
  if (max_width <= 0) throw UsageError("refinement width must be positive");
  while (root.width() >= max_width) bisect(root);
}

int RealRootIsolator::multiplicity(const RootInterval& root) const {
  for (std::size_t i = 0; i < yun_.size(); ++i) {
    const Polynomial& f = yun_[i];
    if (f.degree() < 1) continue;
    if (f.sign_at(root.lo) != f.sign_at(root.hi)) return static_cast<int>(i) + 1;
  }
  throw InvariantViolation("root interval does not bracket a root of any squarefree factor");
}

Rational cauchy_bound(const Polynomial& p) {
  require_nonzero(p);
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

std::size_t count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
  return RealRootIsolator(p).count(lo, hi);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const std::optional<Rational>& max_width) {
  RealRootIsolator iso(p);
  std::vector<RootInterval> roots = iso.isolate();
  if (max_width) {
    for (RootInterval& r : roots) iso.refine(r, *max_width);
  }
  return roots;
}

bool is_squarefree(const Polynomial& p) {
  require_nonzero(p);
  return gcd(p, p.derivative()).degree() <= 0;
}

Polynomial squarefree_part(const Polynomial& p) {
  require_nonzero(p);
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

bool common_roots(const Polynomial& p, const Polynomial& q) {
  require_nonzero(p);
  require_nonzero(q);
  return gcd(p, q).degree() > 0;
}

std::size_t common_real_roots(const Polynomial& p, const Polynomial& q, const Bound& lo, const Bound& hi) {
  require_nonzero(p);
  require_nonzero(q);
  const Polynomial g = gcd(p, q);
  if (g.degree() < 1) return 0;
  return count_real_roots(g, lo, hi);
}

}  // namespace flagcurve::exact

namespace flagcurve::exact {

std::vector<TaggedRoot> merge_roots(const std::vector<RealRootIsolator>& isolators, std::vector<TaggedRoot> roots,
                                    int max_rounds) {
  auto by_lo = [](const TaggedRoot& a, const TaggedRoot& b) { return a.root.lo < b.root.lo; };
  for (int round = 0; round < max_rounds; ++round) {
    std::sort(roots.begin(), roots.end(), by_lo);
    bool clean = true;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      auto& a = roots[i];
      auto& b = roots[i + 1];
      // Closed-interval disjointness keeps a gap between neighbours.
      if (a.root.hi < b.root.lo) continue;
      clean = false;
      isolators[a.owner].bisect(a.root);
      isolators[b.owner].bisect(b.root);
    }
    if (clean) return roots;
  }
  throw InvariantViolation("root intervals did not separate; coincident roots?");
}

}  // namespace flagcurve::exact
