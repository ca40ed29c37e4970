#pragma once

#include <string_view>
#include <vector>

#include "nlsenergy/algebra/density_expr.hpp"

namespace nlsenergy::algebra {

/// All canonical monomials with the given signature and every order at most
/// max_order, in ascending monomial order.
std::vector<Monomial> enumerate_monomials(const Signature& sig, int max_order);

/// One vanishing functional per monomial m of signature (n_u, n_ubar, total-1)
/// with orders <= max_order-1: the expansion of the integral of d_x(m).
/// Throws std::invalid_argument when sig.total_derivs < 1.
std::vector<DensityExpr> ibp_generators(const Signature& sig, int max_order);

/// The total-derivative identity generated by a single monomial.
DensityExpr total_derivative(const Monomial& m);

enum class DensityClass { Omega, Theta, Gamma, Other };

std::string_view to_string(DensityClass c);

/// Omega: signature (p+1,p+1,2k) with >= 4 derivative-bearing factors.
/// Theta: signature (2p+1,2p+1,2k-2) with top orders <= k-1.
/// Gamma: signature (p+1,p+1,2k-2) with top orders <= k-1.
DensityClass classify(const Monomial& m, int k, int p);

}  // namespace nlsenergy::algebra
