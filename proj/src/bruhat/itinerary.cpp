#include "flagcurve/bruhat/itinerary.hpp"
#include "flagcurve/errors.hpp"

namespace flagcurve::bruhat {

std::string Itinerary::letters() const {
  std::string s;
  for (const auto& e : entries) s += static_cast<char>('a' + e.k - 1);
  return s;
}

std::vector<std::size_t> Itinerary::letter_counts(std::size_t n) const {
  std::vector<std::size_t> counts(n > 0 ? n - 1 : 0, 0);
  for (const auto& e : entries) ++counts[e.k - 1];
  return counts;
}

Itinerary itinerary(const curve::PolynomialCurve& c, const exact::Bound& lo, const exact::Bound& hi,
                    const std::optional<exact::Rational>& max_width) {
  const auto minors = curve::all_minors(c);
  std::vector<exact::RealRootIsolator> isolators;
  std::vector<exact::TaggedRoot> roots;
  for (std::size_t i = 0; i < minors.size(); ++i) {
    isolators.emplace_back(minors[i]);
    for (const auto& r : isolators.back().isolate(lo, hi)) {
      if (isolators.back().multiplicity(r) != 1) {
        throw DegenerateError("itinerary undefined: m_" + std::to_string(i + 1) + " has a multiple root; distinctify first");
      }
      roots.push_back({r, i});
    }
  }
  for (std::size_t a = 0; a < minors.size(); ++a) {
    for (std::size_t b = a + 1; b < minors.size(); ++b) {
      if (exact::common_real_roots(minors[a], minors[b], lo, hi) != 0) {
        throw DegenerateError("itinerary undefined: m_" + std::to_string(a + 1) + " and m_" + std::to_string(b + 1) +
                              " share a root; distinctify first");
      }
    }
  }
  roots = exact::merge_roots(isolators, std::move(roots));
  Itinerary it;
  for (auto& r : roots) {
    if (max_width) isolators[r.owner].refine(r.root, *max_width);
    it.entries.push_back({r.owner + 1, r.root});
  }
  return it;
}

NontransversalityCount count_nontransversality(const curve::PolynomialCurve& c, const exact::RationalMatrix& l1,
                                               const exact::Bound& lo, const exact::Bound& hi) {
  const curve::PolynomialCurve moved(l1 * c.l0(), c.n0());
  NontransversalityCount out;
  for (const auto& m : curve::all_minors(moved)) {
    const exact::RealRootIsolator iso(m);
    const auto roots = iso.isolate(lo, hi);
    std::size_t with_mult = 0;
    for (const auto& r : roots) with_mult += static_cast<std::size_t>(iso.multiplicity(r));
    out.distinct.push_back(roots.size());
    out.with_multiplicity.push_back(with_mult);
    out.total_distinct += roots.size();
    out.total_with_multiplicity += with_mult;
  }
  return out;
}

}  // namespace flagcurve::bruhat
