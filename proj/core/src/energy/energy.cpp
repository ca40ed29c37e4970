#include "nlsenergy/energy/energy.hpp"

#include <algorithm>

#include "nlsenergy/algebra/basis.hpp"
#include "nlsenergy/algebra/operations.hpp"
#include "nlsenergy/algebra/text_format.hpp"

namespace nlsenergy::energy {
namespace {

using algebra::Coefficient;
using algebra::DensityClass;
using algebra::Monomial;
using algebra::QuotientSpace;
using algebra::Signature;

bool all_of_class(const DensityExpr& e, DensityClass cls, int k, int p) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [&](const auto& t) { return algebra::classify(t.first, k, p) == cls; });
}

DensityExpr catalogue_combination(const CorrectionCatalogue& cat,
                                  const std::vector<std::pair<std::string, mpq_class>>& coefficients) {
  DensityExpr out;
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    if (sgn(coefficients[i].second) != 0) out += cat.entries[i].expr * Coefficient(coefficients[i].second);
  return out;
}

// Theta part of starstar(F): the allowed component after reduction in the
// Theta sector. Skips the elimination when starstar(F) is already in Theta.
DensityExpr theta_residual(const DensityExpr& nonlinear, int k, int p) {
  if (all_of_class(nonlinear, DensityClass::Theta, k, p)) return nonlinear;
  auto red = theta_sector_quotient(k, p).reduce(nonlinear);
  if (!red.in_span())
    throw InfeasibleSystem("nonlinear sector is not in span(IBP, Theta_k)", red.residual);
  return red.allowed_part;
}

}  // namespace

DensityExpr sobolev_density(int k) {
  DensityExpr out(Monomial({0}, {0}));
  out.add_term(Monomial({k}, {k}), 1);
  return out;
}

DensityExpr energy_expression(const EnergyDefinition& e) { return sobolev_density(e.k) + e.F_k; }

DensityExpr cubic_term(int k, int p) { return k % 3 == 0 ? cubic_remainder(k, p) : DensityExpr(); }

DensityExpr hk_derivative(int k, int p) {
  const DensityExpr top(Monomial({k}, {k}));
  return algebra::time_derivative(top, p);
}

QuotientSpace star_sector_quotient(int k, int p) {
  return algebra::sector_quotient({p + 1, p + 1, 2 * k},
                                  [k, p](const Monomial& m) { return algebra::classify(m, k, p) == DensityClass::Omega; });
}

QuotientSpace theta_sector_quotient(int k, int p) {
  return algebra::sector_quotient({2 * p + 1, 2 * p + 1, 2 * k - 2},
                                  [k, p](const Monomial& m) { return algebra::classify(m, k, p) == DensityClass::Theta; });
}

QuotientSpace gamma_sector_quotient(int k, int p) {
  return algebra::sector_quotient({p + 1, p + 1, 2 * k - 2},
                                  [k, p](const Monomial& m) { return algebra::classify(m, k, p) == DensityClass::Gamma; });
}

std::optional<std::vector<mpq_class>> coordinates_modulo(const QuotientSpace& q, const DensityExpr& target,
                                                         std::span<const DensityExpr> basis) {
  std::vector<DensityExpr> columns;
  columns.reserve(basis.size());
  for (const auto& b : basis) columns.push_back(q.reduce(b).residual);
  auto sol = algebra::solve_real_combination(columns, q.reduce(target).residual);
  if (!sol) return std::nullopt;
  return sol->values;
}

EnergyDefinition solve_energy(int k, int p, const SolveOptions& options) {
  const CorrectionCatalogue cat = build_catalogue(k, p, options.catalogue);
  const QuotientSpace star_q = star_sector_quotient(k, p);

  const DensityExpr target = algebra::starstar(DensityExpr(Monomial({k}, {k})), p);
  const DensityExpr cubic = cubic_term(k, p);
  const bool has_cubic = !cubic.empty();

  std::vector<DensityExpr> columns;
  columns.reserve(cat.entries.size() + 1);
  for (const auto& entry : cat.entries) columns.push_back(star_q.reduce(algebra::star(entry.expr)).residual);
  if (has_cubic) columns.push_back(-star_q.reduce(cubic).residual);

  std::vector<std::size_t> pinned;
  for (const auto& name : options.pinned) {
    auto it = std::find_if(cat.entries.begin(), cat.entries.end(), [&](const auto& e) { return e.name == name; });
    if (it == cat.entries.end()) throw std::invalid_argument("unknown catalogue entry '" + name + "'");
    pinned.push_back(static_cast<std::size_t>(it - cat.entries.begin()));
  }

  const DensityExpr target_nf = star_q.reduce(target).residual;
  auto sol = algebra::solve_real_combination(columns, -target_nf, pinned);
  if (!sol)
    throw InfeasibleSystem("no correction coefficients cancel the star sector for k=" + std::to_string(k) +
                               ", p=" + std::to_string(p),
                           target_nf);

  EnergyDefinition out;
  out.k = k;
  out.p = p;
  for (std::size_t i = 0; i < cat.entries.size(); ++i) out.coefficients.emplace_back(cat.entries[i].name, sol->values[i]);
  out.cubic_coeff = has_cubic ? sol->values.back() : mpq_class(0);
  out.F_k = catalogue_combination(cat, out.coefficients);

  const DensityExpr star_sector = target + algebra::star(out.F_k) - cubic * Coefficient(out.cubic_coeff);
  auto red = star_q.reduce(star_sector);
  if (!red.in_span()) throw InfeasibleSystem("star sector residual does not vanish", red.residual);
  out.residual_omega = red.allowed_part;

  out.residual_theta = theta_residual(algebra::starstar(out.F_k, p), k, p);
  out.exact_derivative = algebra::time_derivative(energy_expression(out), p);
  return out;
}

EnergyDefinition reduce_to_gamma(EnergyDefinition energy) {
  const int k = energy.k;
  const int p = energy.p;
  if (all_of_class(energy.F_k, DensityClass::Gamma, k, p)) return energy;
  auto red = gamma_sector_quotient(k, p).reduce(energy.F_k);
  if (!red.in_span())
    throw NoGammaRepresentative("F_k has no representative with orders <= k-1:\n" + algebra::to_text(red.residual));
  energy.F_k = red.allowed_part;
  energy.residual_theta = theta_residual(algebra::starstar(energy.F_k, p), k, p);
  energy.exact_derivative = algebra::time_derivative(energy_expression(energy), p);
  return energy;
}

EnergyDefinition build_energy(int k, int p, const SolveOptions& options) {
  return reduce_to_gamma(solve_energy(k, p, options));
}

std::vector<std::string> check_invariants(const EnergyDefinition& e) {
  std::vector<std::string> errors;
  const int k = e.k;
  const int p = e.p;
  if (k < 2 || p < 2) {
    errors.push_back("k and p must be at least 2");
    return errors;
  }
  if (!all_of_class(e.F_k, DensityClass::Gamma, k, p)) errors.push_back("F_k has a monomial outside Gamma_k");
  if (!e.F_k.is_real()) errors.push_back("F_k is not real-valued");
  if (!all_of_class(e.residual_omega, DensityClass::Omega, k, p))
    errors.push_back("residual_omega has a monomial outside Omega_k");
  if (!all_of_class(e.residual_theta, DensityClass::Theta, k, p))
    errors.push_back("residual_theta has a monomial outside Theta_k");
  if (k % 3 != 0 && sgn(e.cubic_coeff) != 0) errors.push_back("cubic_coeff must vanish for k not divisible by 3");

  const auto cat = build_catalogue(k, p);
  if (e.coefficients.size() != cat.entries.size()) {
    errors.push_back("coefficient table does not match the catalogue");
    return errors;
  }
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    if (e.coefficients[i].first != cat.entries[i].name)
      errors.push_back("unexpected coefficient name '" + e.coefficients[i].first + "'");
  if (!errors.empty()) return errors;

  if (algebra::time_derivative(energy_expression(e), p) != e.exact_derivative)
    errors.push_back("exact_derivative differs from the time derivative of the energy");

  const DensityExpr f_from_coefficients = catalogue_combination(cat, e.coefficients);
  const Signature gamma_sector{p + 1, p + 1, 2 * k - 2};
  const DensityExpr drift = e.F_k - f_from_coefficients;
  if (!drift.empty() && !algebra::sector_quotient(gamma_sector).reduce(drift).in_span())
    errors.push_back("F_k is not equivalent to the coefficient table");

  const DensityExpr remainder =
      e.exact_derivative - e.residual_omega - e.residual_theta - cubic_term(k, p) * Coefficient(e.cubic_coeff);
  if (!algebra::in_ibp_span(remainder))
    errors.push_back("exact_derivative does not decompose into Omega + Theta + cubic modulo integration by parts");
  return errors;
}

}  // namespace nlsenergy::energy
