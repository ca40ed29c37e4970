#pragma once

#include "nlsenergy/algebra/density_expr.hpp"

namespace nlsenergy::algebra {

/// Flips every factor's conjugation and conjugates every coefficient.
DensityExpr conjugate(const DensityExpr& e);

/// (e + conj e) / 2
DensityExpr re_part(const DensityExpr& e);
/// (e - conj e) / (2i)
DensityExpr im_part(const DensityExpr& e);

/// Time derivative along the linear flow: d_t u -> i u_xx, d_t ubar -> -i ubar_xx.
DensityExpr star(const DensityExpr& e);

/// Time derivative along the nonlinear flow: d_t u -> -i |u|^{2p} u and
/// d_t ubar -> i |u|^{2p} ubar, expanded with the multinomial Leibniz rule.
/// Throws std::invalid_argument for p < 1.
DensityExpr starstar(const DensityExpr& e, int p);

/// star(e) + starstar(e, p): the formal time derivative along the full flow.
DensityExpr time_derivative(const DensityExpr& e, int p);

}  // namespace nlsenergy::algebra
