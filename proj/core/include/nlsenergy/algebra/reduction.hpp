#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nlsenergy/algebra/density_expr.hpp"

namespace nlsenergy::algebra {

/// Raised when an expression and a set of generators do not share one sector.
class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// expr == residual + sum_g certificate[g] * generator[g] + allowed_part.
struct Reduction {
  DensityExpr residual;
  std::vector<Coefficient> certificate;
  DensityExpr allowed_part;

  bool in_span() const { return residual.empty(); }
};

/// Row-echelon form of a family of generators modulo a set of allowed
/// monomials, all within one signature sector.
///
/// Columns are the non-allowed monomials in descending monomial order and the
/// pivot of each row is its leading (greatest) column, so the residual of a
/// reduction is the unique representative supported on non-pivot columns. It
/// does not depend on the order in which generators are supplied.
class QuotientSpace {
 public:
  using AllowedPredicate = std::function<bool(const Monomial&)>;

  explicit QuotientSpace(std::vector<DensityExpr> generators, AllowedPredicate allowed = {});

  /// Throws SignatureMismatch if e mixes sectors or leaves the generators' sector.
  Reduction reduce(const DensityExpr& e) const;

  bool is_allowed(const Monomial& m) const { return allowed_ && allowed_(m); }
  const std::vector<DensityExpr>& generators() const { return generators_; }
  std::optional<Signature> sector() const { return sector_; }
  std::size_t rank() const { return pivot_count_; }

 private:
  using SparseRow = std::map<int, Coefficient>;
  struct PivotRow {
    std::vector<std::pair<int, Coefficient>> entries;  // ascending columns, entries[0] is the pivot with value 1
    SparseRow combination;                             // over generator indices
  };

  // Eliminates pivot columns from `work` in ascending column order. Returns the
  // generator combination that was subtracted; `work` is left with non-pivot columns.
  SparseRow eliminate(SparseRow& work) const;

  std::vector<DensityExpr> generators_;
  AllowedPredicate allowed_;
  std::optional<Signature> sector_;
  std::map<Monomial, int> column_of_;
  std::vector<Monomial> monomial_of_;
  std::vector<std::optional<PivotRow>> pivots_;
  std::size_t pivot_count_ = 0;
};

/// Functional form of QuotientSpace::reduce for a one-off query.
Reduction reduce_modulo(const DensityExpr& expr, std::span<const DensityExpr> generators,
                        std::span<const Monomial> allowed);

/// Quotient of one sector by all of its integration-by-parts identities.
QuotientSpace sector_quotient(const Signature& sig, QuotientSpace::AllowedPredicate allowed = {});

/// True iff every sector of e vanishes modulo integration by parts.
bool in_ibp_span(const DensityExpr& e);

/// Result of an exact real linear solve with free unknowns set to zero.
struct RealSolution {
  std::vector<mpq_class> values;
  std::vector<std::size_t> pivot_columns;
};

/// Finds real x with sum_j x_j * columns[j] == rhs, treating the real and
/// imaginary part of every monomial coefficient as a separate equation.
/// Unknowns are pivoted in the given column order; unknowns listed in
/// `pinned` are fixed to zero. Returns nullopt when the system is inconsistent.
std::optional<RealSolution> solve_real_combination(std::span<const DensityExpr> columns, const DensityExpr& rhs,
                                                   std::span<const std::size_t> pinned = {});

}  // namespace nlsenergy::algebra
