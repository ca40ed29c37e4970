#include "nlsenergy/energy/lemmas.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "nlsenergy/algebra/operations.hpp"
#include "nlsenergy/energy/energy.hpp"

namespace nlsenergy::energy {
namespace {

using algebra::Coefficient;

struct Builder {
  int k;
  int p;
  const CorrectionCatalogue& cat;
  std::vector<LemmaIdentity> out;

  DensityExpr starred(Family f, int h) const {
    const std::string name = entry_name(f, k, h);
    for (const auto& e : cat.entries)
      if (e.name == name) return algebra::star(e.expr);
    throw std::logic_error("catalogue lacks " + name);
  }

  DensityExpr combo(std::initializer_list<std::pair<long, std::pair<Family, int>>> terms) const {
    DensityExpr r;
    for (const auto& [scale, fh] : terms) r += basic_density(fh.first, k, fh.second, p) * Coefficient(scale);
    return r;
  }

  void add(std::string label, DensityExpr lhs, DensityExpr rhs) {
    out.push_back({std::move(label), std::move(lhs), std::move(rhs)});
  }
};

}  // namespace

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

std::vector<LemmaIdentity> lemma_identities(int k, int p, const CatalogueOptions& options) {
  const auto cat = build_catalogue(k, p, options);
  const int m = k / 3;
  const int r = k % 3;
  using F = Family;
  Builder b{k, p, cat, {}};

  // Lowest level, any k >= 2.
  b.add("first.I", b.starred(F::I, 1), b.combo({{2, {F::I, 0}}, {-2 * (p - 1), {F::I, 1}}}));
  b.add("first.V", b.starred(F::V, 1), b.combo({{4 * p, {F::V, 0}}}));
  if (k <= 2) return std::move(b.out);
  b.add("first.W", b.starred(F::W, 1), b.combo({{2, {F::V, 0}}, {-2, {F::W, 0}}, {-2, {F::V, 1}}}));

  // Intermediate levels.
  for (int h = 1; h < m; ++h) {
    const std::string tag = ".h" + std::to_string(h);
    b.add("middle.I" + tag, b.starred(F::I, h + 1), b.combo({{2, {F::I, h}}, {-2, {F::I, h + 1}}}));
    b.add("middle.K" + tag, b.starred(F::K, h + 1), b.combo({{2, {F::K, h}}}));
    b.add("middle.V" + tag, b.starred(F::V, h + 1), b.combo({{2, {F::V, h}}}));
    b.add("middle.W" + tag, b.starred(F::W, h + 1),
          b.combo({{2, {F::V, h}}, {-2, {F::W, h}}, {-2, {F::V, h + 1}}}));
  }

  // The W identity extends to h = m once k >= 4 (it fails at k = 3).
  if (k >= 4)
    b.add("middle.W.h" + std::to_string(m), b.starred(F::W, m + 1),
          b.combo({{2, {F::V, m}}, {-2, {F::W, m}}, {-2, {F::V, m + 1}}}));

  // Top level, depending on k mod 3.
  b.add("top.K", b.starred(F::K, m + 1), b.combo({{2, {F::K, m}}}));
  b.add("top.V", b.starred(F::V, m + 1), b.combo({{2, {F::V, m}}}));
  if (r == 0) {
    b.add("top.3m", b.starred(F::I, m + 1), DensityExpr());
    if (m > 1)
      b.add("top.3m.2", b.starred(F::W, m + 1),
            b.combo({{2, {F::V, m}}, {-2, {F::W, m}}, {-2, {F::W, m - 1}}, {-2, {F::K, m - 1}}, {4, {F::K, m}}}));
  } else if (r == 1) {
    b.add("top.3m+1", b.starred(F::I, m + 1), b.combo({{6, {F::I, m}}}));
  } else {
    b.add("top.3m+2.I", b.starred(F::I, m + 1), b.combo({{2, {F::I, m}}}));
    b.add("top.3m+2.W", b.starred(F::W, m + 1), b.combo({{2, {F::V, m}}, {-1, {F::W, m}}, {2, {F::K, m}}}));
  }
  return std::move(b.out);
}

LemmaReport verify_lemmas(int k, int p, const CatalogueOptions& options) {
  LemmaReport report{k, p, {}};
  const auto quotient = star_sector_quotient(k, p);
  for (const auto& id : lemma_identities(k, p, options)) {
    const auto red = quotient.reduce(id.lhs - id.rhs);
    const auto used = std::count_if(red.certificate.begin(), red.certificate.end(),
                                    [](const Coefficient& c) { return !c.is_zero(); });
    report.checks.push_back({id.label, red.in_span(), static_cast<std::size_t>(used) + red.allowed_part.size()});
  }
  return report;
}

}  // namespace nlsenergy::energy
