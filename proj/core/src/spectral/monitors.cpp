#include "nlsenergy/spectral/monitors.hpp"

#include <cmath>

#include "nlsenergy/algebra/operations.hpp"
#include "nlsenergy/spectral/evaluate.hpp"

namespace nlsenergy::spectral {

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

CrosscheckEntry derivative_crosscheck(const energy::EnergyDefinition& energy, const SpectralState& state,
                                      const SolverConfig& config, int fd_steps) {
  if (fd_steps < 1) throw std::invalid_argument("finite-difference step count must be positive");
  const DensityExpr e_k = energy::energy_expression(energy);

  SolverConfig fwd_cfg = config;
  fwd_cfg.dt = std::abs(config.dt);
  SolverConfig bwd_cfg = config;
  bwd_cfg.dt = -std::abs(config.dt);
  const Solver fwd(state.n_modes, energy.p, fwd_cfg);
  const Solver bwd(state.n_modes, energy.p, bwd_cfg);

  SpectralState plus = state;
  SpectralState minus = state;
  for (int i = 0; i < fd_steps; ++i) {
    fwd.step(plus);
    bwd.step(minus);
  }
  const double delta = fd_steps * std::abs(config.dt);

  CrosscheckEntry out;
  out.t = state.t;
  Evaluator ev(state);
  out.energy = ev.real_expression(e_k);
  out.fd = (evaluate_expr(e_k, plus) - evaluate_expr(e_k, minus)) / (2.0 * delta);
  out.exact = ev.real_expression(energy.exact_derivative);
  out.decomposition = ev.real_expression(energy.residual_omega) + ev.real_expression(energy.residual_theta);
  if (sgn(energy.cubic_coeff) != 0)
    out.decomposition += energy.cubic_coeff.get_d() * ev.real_expression(energy::cubic_term(energy.k, energy.p));
  out.rel_fd = relative_error(out.fd, out.exact);
  out.rel_decomposition = relative_error(out.decomposition, out.exact);
  return out;
}

double bound_exponent(int k) { return static_cast<double>(2 * k - 4) / static_cast<double>(k - 1); }

BoundMonitor::BoundMonitor(const energy::EnergyDefinition& energy)
    : energy_(energy), cubic_(energy::cubic_term(energy.k, energy.p)) {}

BoundSample BoundMonitor::record(const SpectralState& s) {
  BoundSample out;
  out.t = s.t;
  Evaluator ev(s);
  out.hk = sobolev_norm(s, energy_.k);
  const double norm = energy_.k == 2 ? 1.0 : std::pow(out.hk, bound_exponent(energy_.k));
  out.F = ev.real_expression(energy_.F_k);
  out.ratio = std::abs(out.F) / norm;
  for (const auto& [m, v] : ev.terms(energy_.F_k)) out.density_ratios.push_back(std::abs(v) / norm);
  if (!cubic_.empty()) out.cubic_integrand = energy_.cubic_coeff.get_d() * ev.real_expression(cubic_);
  if (started_) integral_ += 0.5 * (out.t - last_t_) * (out.cubic_integrand + last_integrand_);
  started_ = true;
  last_t_ = out.t;
  last_integrand_ = out.cubic_integrand;
  out.cubic_integral = integral_;
  return out;
}

std::vector<BoundSample> bound_monitor(const energy::EnergyDefinition& energy,
                                       const std::vector<SpectralState>& trajectory) {
  BoundMonitor monitor(energy);
  std::vector<BoundSample> out;
  out.reserve(trajectory.size());
  for (const auto& s : trajectory) out.push_back(monitor.record(s));
  return out;
}

}  // namespace nlsenergy::spectral
