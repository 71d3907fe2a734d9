#include "flagcurve/bruhat/good_matrix.hpp"
#include "flagcurve/cli/random_curves.hpp"

namespace flagcurve::cli {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CurveSpec random_curve_spec(std::mt19937_64& rng, std::size_t n) {
  CurveSpec spec;
  spec.l0 = exact::identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      long p = draw(rng, 1, 9);
      if (draw(rng, 0, 1) == 1) p = -p;
      spec.l0(i, j) = exact::make_rational(p, draw(rng, 1, 8));
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) spec.subdiag.push_back(exact::make_rational(draw(rng, 1, 6), draw(rng, 1, 4)));
  return spec;
}

CurveSpec perturbed(const CurveSpec& spec, std::mt19937_64& rng, int attempt) {
  CurveSpec out = spec;
  const Rational delta = exact::make_rational(draw(rng, 1, 7), 1) * exact::pow2(-(attempt + 6)) *
                         (draw(rng, 0, 1) == 1 ? 1 : -1);
  if (out.word && !out.taus.empty()) {
    // Last parameter first, as in distinctify.
    const std::size_t idx = out.taus.size() - 1 - static_cast<std::size_t>(attempt) % out.taus.size();
    out.taus[idx] += delta * exact::abs(out.taus[idx]);
    out.l0 = bruhat::product_of_generators(out.n(), *out.word, out.taus);
    return out;
  }
  const std::size_t n = out.n();
  const std::size_t i = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(n) - 1));
  const std::size_t j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(i) - 1));
  out.l0(i, j) += delta;
  return out;
}

}  // namespace flagcurve::cli
