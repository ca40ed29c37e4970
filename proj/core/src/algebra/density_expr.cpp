#include "nlsenergy/algebra/density_expr.hpp"

#include <algorithm>

#include "nlsenergy/algebra/operations.hpp"

namespace nlsenergy::algebra {

DensityExpr::DensityExpr(Monomial m, Coefficient c) { add_term(m, c); }

Coefficient DensityExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

void DensityExpr::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DensityExpr& DensityExpr::operator+=(const DensityExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DensityExpr& DensityExpr::operator-=(const DensityExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DensityExpr& DensityExpr::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::set<Signature> DensityExpr::signatures() const {
  std::set<Signature> out;
  for (const auto& [m, c] : terms_) out.insert(m.signature());
  return out;
}

int DensityExpr::max_order() const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.max_order());
  return out;
}

bool DensityExpr::is_real() const { return conjugate(*this) == *this; }

std::map<Signature, DensityExpr> split_by_signature(const DensityExpr& e) {
  std::map<Signature, DensityExpr> out;
  for (const auto& [m, c] : e.terms()) out[m.signature()].add_term(m, c);
  return out;
}

}  // namespace nlsenergy::algebra
