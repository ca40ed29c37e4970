#pragma once

#include <map>
#include <set>

#include "nlsenergy/algebra/coefficient.hpp"
#include "nlsenergy/algebra/monomial.hpp"

namespace nlsenergy::algebra {

/// Finite linear combination of canonical monomials with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
class DensityExpr {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  DensityExpr() = default;
  explicit DensityExpr(Monomial m, Coefficient c = 1);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Zero when the monomial is absent.
  Coefficient coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Coefficient& c);

  DensityExpr& operator+=(const DensityExpr& o);
  DensityExpr& operator-=(const DensityExpr& o);
  DensityExpr& operator*=(const Coefficient& c);

  friend DensityExpr operator+(DensityExpr a, const DensityExpr& b) { return a += b; }
  friend DensityExpr operator-(DensityExpr a, const DensityExpr& b) { return a -= b; }
  friend DensityExpr operator*(DensityExpr a, const Coefficient& c) { return a *= c; }
  friend DensityExpr operator*(const Coefficient& c, DensityExpr a) { return a *= c; }
  DensityExpr operator-() const { return *this * Coefficient(-1); }

  friend bool operator==(const DensityExpr&, const DensityExpr&) = default;

  std::set<Signature> signatures() const;
  int max_order() const;
  /// True iff the expression is fixed by conjugation (a real-valued functional).
  bool is_real() const;

 private:
  TermMap terms_;
};

/// Splits an expression into its signature sectors.
std::map<Signature, DensityExpr> split_by_signature(const DensityExpr& e);

}  // namespace nlsenergy::algebra
