#include "nlsenergy/algebra/reduction.hpp"

#include <algorithm>
#include <set>

#include "nlsenergy/algebra/basis.hpp"

namespace nlsenergy::algebra {

QuotientSpace::QuotientSpace(std::vector<DensityExpr> generators, AllowedPredicate allowed)
    : generators_(std::move(generators)), allowed_(std::move(allowed)) {
  for (const auto& g : generators_) {
    for (const auto& s : g.signatures()) {
      if (sector_ && *sector_ != s)
        throw SignatureMismatch("QuotientSpace: generators span sectors " + to_string(*sector_) + " and " +
                                to_string(s));
      sector_ = s;
    }
  }

  std::set<Monomial, std::greater<>> columns;
  for (const auto& g : generators_)
    for (const auto& [m, c] : g.terms())
      if (!is_allowed(m)) columns.insert(m);
  for (const auto& m : columns) {
    column_of_.emplace(m, static_cast<int>(monomial_of_.size()));
    monomial_of_.push_back(m);
  }
  pivots_.resize(monomial_of_.size());

  for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
    SparseRow work;
    for (const auto& [m, c] : generators_[gi].terms())
      if (!is_allowed(m)) work.emplace(column_of_.at(m), c);
    if (work.empty()) continue;
    SparseRow used = eliminate(work);
    if (work.empty()) continue;

    const Coefficient lead = work.begin()->second;
    PivotRow row;
    row.entries.reserve(work.size());
    for (const auto& [col, v] : work) row.entries.emplace_back(col, v / lead);
    row.combination.emplace(static_cast<int>(gi), Coefficient(1) / lead);
    for (const auto& [g, v] : used) {
      Coefficient scaled = -(v / lead);
      auto [it, inserted] = row.combination.try_emplace(g, scaled);
      if (!inserted) {
        it->second += scaled;
        if (it->second.is_zero()) row.combination.erase(it);
      }
    }
    const int pivot_col = row.entries.front().first;
    pivots_[static_cast<std::size_t>(pivot_col)] = std::move(row);
    ++pivot_count_;
  }
}

QuotientSpace::SparseRow QuotientSpace::eliminate(SparseRow& work) const {
  SparseRow used;
  SparseRow kept;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const int col = node.key();
    const Coefficient val = std::move(node.mapped());
    const auto& pivot = pivots_[static_cast<std::size_t>(col)];
    if (!pivot) {
      kept.emplace(col, val);
      continue;
    }
    for (std::size_t i = 1; i < pivot->entries.size(); ++i) {
      const auto& [c2, v2] = pivot->entries[i];
      Coefficient delta = -(val * v2);
      auto [it, inserted] = work.try_emplace(c2, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    for (const auto& [g, v] : pivot->combination) {
      Coefficient delta = val * v;
      auto [it, inserted] = used.try_emplace(g, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) used.erase(it);
      }
    }
  }
  work = std::move(kept);
  return used;
}

Reduction QuotientSpace::reduce(const DensityExpr& e) const {
  const auto sigs = e.signatures();
  if (sigs.size() > 1) throw SignatureMismatch("reduce: expression mixes several signature sectors");
  if (!sigs.empty() && sector_ && *sigs.begin() != *sector_)
    throw SignatureMismatch("reduce: expression sector " + to_string(*sigs.begin()) +
                            " differs from generator sector " + to_string(*sector_));

  Reduction out;
  out.certificate.assign(generators_.size(), Coefficient());
  SparseRow work;
  for (const auto& [m, c] : e.terms()) {
    if (is_allowed(m)) continue;
    auto it = column_of_.find(m);
    if (it == column_of_.end())
      out.residual.add_term(m, c);
    else
      work.emplace(it->second, c);
  }
  const SparseRow used = eliminate(work);
  for (const auto& [col, v] : work) out.residual.add_term(monomial_of_[static_cast<std::size_t>(col)], v);

  DensityExpr remainder = e;
  for (const auto& [g, v] : used) {
    out.certificate[static_cast<std::size_t>(g)] = v;
    remainder -= generators_[static_cast<std::size_t>(g)] * v;
  }
  for (const auto& [m, c] : remainder.terms())
    if (is_allowed(m)) out.allowed_part.add_term(m, c);
  return out;
}

Reduction reduce_modulo(const DensityExpr& expr, std::span<const DensityExpr> generators,
                        std::span<const Monomial> allowed) {
  std::set<Monomial> allowed_set(allowed.begin(), allowed.end());
  QuotientSpace q(std::vector<DensityExpr>(generators.begin(), generators.end()),
                  [allowed_set = std::move(allowed_set)](const Monomial& m) { return allowed_set.contains(m); });
  return q.reduce(expr);
}

QuotientSpace sector_quotient(const Signature& sig, QuotientSpace::AllowedPredicate allowed) {
  if (sig.total_derivs < 1) return QuotientSpace({}, std::move(allowed));
  return QuotientSpace(ibp_generators(sig, sig.total_derivs), std::move(allowed));
}

bool in_ibp_span(const DensityExpr& e) {
  for (const auto& [sig, part] : split_by_signature(e))
    if (!sector_quotient(sig).reduce(part).in_span()) return false;
  return true;
}

std::optional<RealSolution> solve_real_combination(std::span<const DensityExpr> columns, const DensityExpr& rhs,
                                                   std::span<const std::size_t> pinned) {
  // Row key: (monomial, imaginary?).
  std::map<std::pair<Monomial, bool>, std::size_t> row_of;
  auto touch = [&row_of](const DensityExpr& e) {
    for (const auto& [m, c] : e.terms()) {
      if (sgn(c.re()) != 0) row_of.try_emplace({m, false}, 0);
      if (sgn(c.im()) != 0) row_of.try_emplace({m, true}, 0);
    }
  };
  for (const auto& col : columns) touch(col);
  touch(rhs);
  std::size_t next = 0;
  for (auto& [key, idx] : row_of) idx = next++;

  const std::size_t n = columns.size();
  std::vector<std::vector<mpq_class>> a(row_of.size(), std::vector<mpq_class>(n + 1));
  auto fill = [&](const DensityExpr& e, std::size_t j) {
    for (const auto& [m, c] : e.terms()) {
      if (sgn(c.re()) != 0) a[row_of.at({m, false})][j] = c.re();
      if (sgn(c.im()) != 0) a[row_of.at({m, true})][j] = c.im();
    }
  };
  for (std::size_t j = 0; j < n; ++j) fill(columns[j], j);
  fill(rhs, n);

  std::vector<bool> is_pinned(n, false);
  for (auto j : pinned)
    if (j < n) is_pinned[j] = true;

  RealSolution sol;
  sol.values.assign(n, 0);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    if (is_pinned[col]) continue;
    std::size_t sel = row;
    while (sel < a.size() && sgn(a[sel][col]) == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const mpq_class lead = a[row][col];
    for (auto& v : a[row]) v /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = 0; j <= n; ++j)
        if (sgn(a[row][j]) != 0) a[i][j] -= f * a[row][j];
    }
    sol.pivot_columns.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < a.size(); ++i) {
    // Remaining rows must be consistent once pinned and free unknowns are zero.
    if (sgn(a[i][n]) != 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < sol.pivot_columns.size(); ++i) sol.values[sol.pivot_columns[i]] = a[i][n];
  return sol;
}

}  // namespace nlsenergy::algebra
