#include "flagcurve/curve/extension.hpp"
#include "flagcurve/errors.hpp"
#include "flagcurve/exactnum/roots.hpp"
#include "flagcurve/words/crossing.hpp"

namespace flagcurve::words {

TheoremMainReport certify_theorem_main(const curve::PolynomialCurve& c, const exact::Rational& lo,
                                       const exact::Rational& hi) {
  const std::size_t n = c.n();
  if (n < 3) throw UsageError("the m_2 bound needs n >= 3");
  TheoremMainReport rep;
  rep.n = n;
  rep.bound = 2 * (static_cast<int>(n) - 2);
  rep.lo = lo;
  rep.hi = hi;

  const exact::Polynomial m2 = curve::minor_k(c, 2);
  rep.m2_root_count = exact::count_real_roots(m2, lo, hi) + (m2.evaluate(lo) == 0 ? 1 : 0);

  const curve::ExtendedCurve ext = curve::extend_curve(c, lo, hi);
  rep.a = ext.a();
  rep.b = ext.b();
  rep.sequence = crossing_sequence(ext);
  rep.rank_trace = rep.sequence.ranks();

  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
  if (rep.sequence.words.front() != totally_negative_word(n)) fail("start word is not the totally negative word");
  if (rep.sequence.words.back() != totally_positive_word(n)) fail("end word is not the totally positive word");
  if (rep.rank_trace.front() != rep.bound) fail("rank does not start at 2(n-2)");
  if (rep.rank_trace.back() != 0) fail("rank does not end at 0");
  for (std::size_t k = 0; k < rep.sequence.crossings.size(); ++k) {
    const auto& x = rep.sequence.crossings[k];
    const int before = rep.rank_trace[k];
    const int after = rep.rank_trace[k + 1];
    if (after > before) {
      fail("rank increases at crossing " + std::to_string(k + 1) + " (" + to_string(x.move.type) + ")");
    }
    if (x.i == 1 && x.j == 2) {
      ++rep.m2_crossings;
      if (after != before - 1) fail("rank does not drop by exactly 1 at {1,2}-crossing " + std::to_string(k + 1));
    }
  }
  if (rep.m2_crossings > static_cast<std::size_t>(rep.bound)) fail("more than 2(n-2) zeros of m_2");
  if (rep.m2_root_count > rep.m2_crossings) fail("zeros of m_2 on the domain exceed those on the extension");
  return rep;
}

}  // namespace flagcurve::words
