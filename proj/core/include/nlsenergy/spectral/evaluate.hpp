#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nlsenergy/algebra/density_expr.hpp"
#include "nlsenergy/spectral/state.hpp"

namespace nlsenergy::spectral {

using algebra::DensityExpr;
using algebra::Monomial;

/// A density that should be real evaluated with a large imaginary part.
class ImaginaryResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature of densities on one state. Derivative fields d^j u are
/// computed once per order and grid and reused across monomials.
///
/// A monomial with F factors is integrated on padding * N points with
/// padding >= F, where the rectangle rule is exact; smaller padding throws
/// InsufficientPadding. padding = 0 selects F.
class Evaluator {
 public:
  explicit Evaluator(const SpectralState& state, int padding = 0);

  cplx monomial(const Monomial& m);

  /// sum c * J, the complex value.
  cplx expression(const DensityExpr& e);

  /// Real part of expression(e). Throws ImaginaryResidue when the imaginary
  /// part exceeds `tolerance` times the term scale sum |c * J|.
  double real_expression(const DensityExpr& e, double tolerance = 1e-9);

  /// Per-monomial values c * J.
  std::vector<std::pair<Monomial, cplx>> terms(const DensityExpr& e);

 private:
  const std::vector<cplx>& field(int grid, int order);
  cplx quadratic(const Monomial& m) const;
  // Sum over two-factor monomials with the coefficient combination carried out
  // exactly per sector, so that exact cancellations stay exact in floating point.
  cplx quadratic_sum(const DensityExpr& e, double& scale) const;

  const SpectralState& state_;
  int padding_;
  std::map<std::pair<int, int>, std::vector<cplx>> fields_;  // (grid, order) -> d^order u on the grid
};

cplx evaluate_monomial(const Monomial& m, const SpectralState& state, int padding = 0);
double evaluate_expr(const DensityExpr& e, const SpectralState& state, int padding = 0);

/// int |du|^2 + 1/(p+1) int |u|^{2p+2}
double hamiltonian(const SpectralState& state, int p);

}  // namespace nlsenergy::spectral
