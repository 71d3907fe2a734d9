#include <random>

#include "flagcurve/bruhat/cell.hpp"
#include "flagcurve/bruhat/good_matrix.hpp"
#include "flagcurve/curve/positivity.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/roots.hpp"

namespace flagcurve::bruhat {

RationalMatrix product_of_generators(std::size_t n, const ReducedWord& word, const std::vector<Rational>& taus) {
  if (word.size() != taus.size()) throw UsageError("word and parameter list differ in length");
  RationalMatrix l = exact::identity_matrix(n);
  for (std::size_t i = 0; i < word.size(); ++i) l = l * generator_matrix(n, word[i], taus[i]);
  return l;
}

std::optional<std::string> goodness_failure(const RationalMatrix& l, const Permutation& rho,
                                            const curve::NilpotentGenerator& n0, const GoodMatrixOptions& opt) {
  const std::size_t n = rho.n();
  if (bruhat_cell(l) != rho) return "matrix is not in the expected Bruhat cell";
  const curve::PolynomialCurve c(l, n0);
  const MultiplicityVector mult = mult_vector(Permutation::top(n) * rho);
  for (std::size_t k = 1; k < n; ++k) {
    const auto m = curve::minor_k(c, k);
    const std::string tag = "m_" + std::to_string(k);
    if (m.order_at_zero() != mult[k - 1]) return tag + ": zero multiplicity at t=0 differs from mult_k(sigma)";
    const auto rest = m.without_zero_root();
    if (!exact::is_squarefree(rest)) return tag + ": repeated nonzero root";
    if (exact::count_real_roots(rest) != static_cast<std::size_t>(rest.degree())) return tag + ": non-real roots";
    if (opt.mode == GoodMode::along_curve) {
      if (exact::count_real_roots(rest, opt.t_minus, opt.t_plus) != static_cast<std::size_t>(rest.degree()) ||
          rest.evaluate(opt.t_plus) == 0) {
        return tag + ": roots outside (t_minus, t_plus)";
      }
    }
  }
  if (opt.mode == GoodMode::along_curve) {
    if (!curve::is_totally_positive(c.at(opt.t_plus))) return "curve is not in Pos at t_plus";
    if (!curve::is_totally_negative(c.at(opt.t_minus))) return "curve is not in Neg at t_minus";
  }
  return std::nullopt;
}

bool is_good(const RationalMatrix& l, const Permutation& rho, const curve::NilpotentGenerator& n0,
             const GoodMatrixOptions& opt) {
  return !goodness_failure(l, rho, n0, opt).has_value();
}

namespace {

// Half the distance from 0 to the nearest nonzero root of any minor, capped at 1.
Rational initial_step(const RationalMatrix& l, const curve::NilpotentGenerator& n0) {
  const curve::PolynomialCurve c(l, n0);
  Rational step = 1;
  for (std::size_t k = 1; k < c.n(); ++k) {
    const auto rest = curve::minor_k(c, k).without_zero_root();
    if (rest.is_constant()) continue;
    const exact::RealRootIsolator iso(rest);
    for (auto r : iso.isolate()) {
      // Roots of `rest` are nonzero, so refining eventually excludes 0.
      while (r.lo <= 0 && r.hi >= 0) iso.bisect(r);
      const Rational d = r.lo > 0 ? r.lo : -r.hi;
      if (d / 2 < step) step = d / 2;
    }
  }
  return step;
}

}  // namespace

GoodMatrix build_good_matrix(std::size_t n, const ReducedWord& word, const curve::NilpotentGenerator& n0,
                             const GoodMatrixOptions& opt) {
  if (n0.n() != n) throw UsageError("generator dimension differs from n");
  if (!is_reduced(n, word)) throw UsageError("word is not reduced");
  if (opt.taus && opt.taus->size() != word.size()) throw UsageError("parameter list and word differ in length");

  std::mt19937_64 rng(opt.sign_seed.value_or(0));
  GoodMatrix g{{}, {}, exact::identity_matrix(n), Permutation::identity(n)};
  for (std::size_t step = 0; step < word.size(); ++step) {
    const int j = word[step];
    const Permutation rho = g.rho * Permutation::generator(n, j);
    g.word.push_back(j);

    if (opt.taus) {
      const Rational tau = (*opt.taus)[step];
      const RationalMatrix next = g.l * generator_matrix(n, j, tau);
      if (auto why = goodness_failure(next, rho, n0, opt)) {
        throw CertificationError("prefix " + word_to_string(g.word) + " is not good: " + *why);
      }
      g.l = next;
      g.taus.push_back(tau);
      g.rho = rho;
      continue;
    }

    int sgn = step % 2 == 0 ? 1 : -1;
    if (opt.sign_seed) sgn = rng() % 2 == 0 ? 1 : -1;
    Rational tau = opt.mode == GoodMode::along_curve ? initial_step(g.l, n0) : Rational(1);
    tau *= sgn;
    bool found = false;
    for (int attempt = 0; attempt < opt.halving_cap; ++attempt, tau /= 2) {
      const RationalMatrix next = g.l * generator_matrix(n, j, tau);
      if (is_good(next, rho, n0, opt)) {
        g.l = next;
        g.taus.push_back(tau);
        g.rho = rho;
        found = true;
        break;
      }
    }
    if (!found) throw CertificationError("goodness not certified for prefix " + word_to_string(g.word));
  }
  return g;
}

bool minors_pairwise_distinct(const curve::PolynomialCurve& c) {
  const auto minors = curve::all_minors(c);
  for (std::size_t a = 0; a < minors.size(); ++a) {
    for (std::size_t b = a + 1; b < minors.size(); ++b) {
      if (exact::common_roots(minors[a], minors[b])) return false;
    }
  }
  return true;
}

GoodMatrix distinctify(const GoodMatrix& g, const curve::NilpotentGenerator& n0, const GoodMatrixOptions& opt,
                       int retry_cap) {
  const std::size_t n = g.rho.n();
  if (minors_pairwise_distinct(curve::PolynomialCurve(g.l, n0))) return g;
  GoodMatrixOptions check = opt;
  check.taus.reset();
  for (std::size_t idx = g.taus.size(); idx-- > 0;) {
    for (int m = 1; m <= retry_cap; ++m) {
      for (int sgn : {1, -1}) {
        GoodMatrix trial = g;
        trial.taus[idx] += sgn * exact::abs(g.taus[idx]) * exact::pow2(-m);
        trial.l = product_of_generators(n, trial.word, trial.taus);
        if (!is_good(trial.l, trial.rho, n0, check)) continue;
        if (minors_pairwise_distinct(curve::PolynomialCurve(trial.l, n0))) return trial;
      }
    }
  }
  throw CertificationError("distinctify: no perturbation separated the minors' roots");
}

}  // namespace flagcurve::bruhat
