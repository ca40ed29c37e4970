#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlsenergy/algebra/reduction.hpp"
#include "nlsenergy/energy/catalogue.hpp"

namespace nlsenergy::energy {

/// The cancellation system has no solution; carries the irreducible part of the
/// target so the failure can be inspected.
class InfeasibleSystem : public std::runtime_error {
 public:
  InfeasibleSystem(const std::string& what, DensityExpr residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const DensityExpr& residual() const { return residual_; }

 private:
  DensityExpr residual_;
};

/// The correction admits no representative with all orders <= k-1.
class NoGammaRepresentative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A stored or imported energy that breaks one of its structural invariants.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E_k(u) = ||u||_{H^k}^2 + F_k(u) together with the exact decomposition of
/// its time derivative along the flow:
///
///   exact_derivative == residual_omega + residual_theta + cubic_coeff * cubic
///
/// modulo integration by parts, where `cubic` is the k = 3m remainder density.
struct EnergyDefinition {
  int k = 0;
  int p = 0;
  std::vector<std::pair<std::string, mpq_class>> coefficients;  // catalogue order
  DensityExpr F_k;
  DensityExpr residual_omega;
  DensityExpr residual_theta;
  mpq_class cubic_coeff;
  DensityExpr exact_derivative;

  friend bool operator==(const EnergyDefinition&, const EnergyDefinition&) = default;
};

/// int u ubar + int d^k u d^k ubar
DensityExpr sobolev_density(int k);

/// int u ubar + int d^k u d^k ubar + F_k
DensityExpr energy_expression(const EnergyDefinition& e);

/// Zero for k not divisible by 3.
DensityExpr cubic_term(int k, int p);

/// star + starstar of int d^k u d^k ubar, fully expanded.
DensityExpr hk_derivative(int k, int p);

/// Sector (p+1, p+1, 2k) modulo integration by parts and Omega_k monomials.
algebra::QuotientSpace star_sector_quotient(int k, int p);
/// Sector (2p+1, 2p+1, 2k-2) modulo integration by parts and Theta_k monomials.
algebra::QuotientSpace theta_sector_quotient(int k, int p);
/// Sector (p+1, p+1, 2k-2) modulo integration by parts and Gamma_k monomials.
algebra::QuotientSpace gamma_sector_quotient(int k, int p);

/// Real coordinates a with target == sum a_i basis_i in the quotient, or
/// nullopt. Free coordinates are zero.
std::optional<std::vector<mpq_class>> coordinates_modulo(const algebra::QuotientSpace& q, const DensityExpr& target,
                                                         std::span<const DensityExpr> basis);

struct SolveOptions {
  /// Catalogue entries whose coefficient is forced to zero.
  std::vector<std::string> pinned;
  CatalogueOptions catalogue;
};

/// Solves for real coefficients of the correction catalogue such that the
/// star sector of dE_k/dt lies in span(IBP, Omega_k) (plus the cubic
/// remainder when k = 3m). Non-pivot unknowns are zero, pivoting in catalogue
/// order. F_k is returned as the plain catalogue combination.
///
/// Throws InfeasibleSystem if no solution exists.
EnergyDefinition solve_energy(int k, int p, const SolveOptions& options = {});

/// Rewrites F_k modulo integration by parts so that every monomial has order
/// <= k-1, then refreshes residual_theta and exact_derivative. Throws
/// NoGammaRepresentative when impossible.
EnergyDefinition reduce_to_gamma(EnergyDefinition energy);

/// solve_energy followed by reduce_to_gamma.
EnergyDefinition build_energy(int k, int p, const SolveOptions& options = {});

/// Empty when the energy satisfies every structural invariant; otherwise one
/// message per violation.
std::vector<std::string> check_invariants(const EnergyDefinition& energy);

}  // namespace nlsenergy::energy
