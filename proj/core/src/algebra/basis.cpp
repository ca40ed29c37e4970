#include "nlsenergy/algebra/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlsenergy::algebra {
namespace {

void descending_lists(int total, int slots, int max_part, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int first = std::min(total, max_part); first >= 0; --first) {
    if (first * slots < total) break;
    prefix.push_back(first);
    descending_lists(total - first, slots - 1, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const Signature& sig, int max_order) {
  if (max_order < 0) throw std::invalid_argument("enumerate_monomials: negative max_order");
  std::vector<Monomial> out;
  std::vector<int> scratch;
  for (int a = 0; a <= sig.total_derivs; ++a) {
    std::vector<std::vector<int>> us;
    std::vector<std::vector<int>> vs;
    descending_lists(a, sig.n_u, max_order, scratch, us);
    if (us.empty()) continue;
    descending_lists(sig.total_derivs - a, sig.n_ubar, max_order, scratch, vs);
    for (const auto& u : us)
      for (const auto& v : vs) out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DensityExpr total_derivative(const Monomial& m) {
  DensityExpr g;
  for (std::size_t l = 0; l < m.u_orders().size(); ++l) {
    auto u = m.u_orders();
    ++u[l];
    g.add_term(Monomial(std::move(u), m.ubar_orders()), 1);
  }
  for (std::size_t l = 0; l < m.ubar_orders().size(); ++l) {
    auto ub = m.ubar_orders();
    ++ub[l];
    g.add_term(Monomial(m.u_orders(), std::move(ub)), 1);
  }
  return g;
}

std::vector<DensityExpr> ibp_generators(const Signature& sig, int max_order) {
  if (sig.total_derivs < 1) throw std::invalid_argument("ibp_generators: sector has no derivatives");
  if (max_order < 1) return {};
  std::vector<DensityExpr> out;
  for (const auto& m : enumerate_monomials({sig.n_u, sig.n_ubar, sig.total_derivs - 1}, max_order - 1)) {
    auto g = total_derivative(m);
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

std::string_view to_string(DensityClass c) {
  switch (c) {
    case DensityClass::Omega: return "Omega";
    case DensityClass::Theta: return "Theta";
    case DensityClass::Gamma: return "Gamma";
    case DensityClass::Other: return "Other";
  }
  return "Other";
}

DensityClass classify(const Monomial& m, int k, int p) {
  if (k < 2) throw std::invalid_argument("classify: k must be at least 2");
  const Signature s = m.signature();
  if (s == Signature{p + 1, p + 1, 2 * k} && m.derivative_bearing() >= 4) return DensityClass::Omega;
  const bool capped = m.max_u_order() <= k - 1 && m.max_ubar_order() <= k - 1;
  if (s == Signature{2 * p + 1, 2 * p + 1, 2 * k - 2} && capped) return DensityClass::Theta;
  if (s == Signature{p + 1, p + 1, 2 * k - 2} && capped) return DensityClass::Gamma;
  return DensityClass::Other;
}

}  // namespace nlsenergy::algebra
