#pragma once

#include <vector>

#include "nlsenergy/energy/energy.hpp"
#include "nlsenergy/spectral/solver.hpp"
#include "nlsenergy/spectral/state.hpp"

namespace nlsenergy::spectral {

/// |a - b| / max(|a|, |b|); zero when both vanish.
double relative_error(double a, double b);

struct CrosscheckEntry {
  double t = 0.0;
  double energy = 0.0;         // E_k(u(t))
  double fd = 0.0;             // (E_k(u(t+delta)) - E_k(u(t-delta))) / (2 delta)
  double exact = 0.0;          // exact_derivative at u(t)
  double decomposition = 0.0;  // residual_omega + residual_theta + c * cubic at u(t)
  double rel_fd = 0.0;
  double rel_decomposition = 0.0;
};

/// Central difference of E_k along the solver with delta = fd_steps * dt,
/// against the symbolic derivative and its residual decomposition.
CrosscheckEntry derivative_crosscheck(const energy::EnergyDefinition& energy, const SpectralState& state,
                                      const SolverConfig& config, int fd_steps = 10);

struct BoundSample {
  double t = 0.0;
  double F = 0.0;
  double hk = 0.0;                    // ||u||_{H^k}
  double ratio = 0.0;                 // |F| / hk^{(2k-4)/(k-1)}
  std::vector<double> density_ratios; // per monomial of F_k, same normalization
  double cubic_integrand = 0.0;       // c * Im int (d^{2m}u)^3 u^{p-2} ubar^{p+1}; zero unless k = 3m
  double cubic_integral = 0.0;        // trapezoid running integral of the integrand
};

/// (2k - 4) / (k - 1)
double bound_exponent(int k);

/// Stateful: each record() extends the running cubic integral.
class BoundMonitor {
 public:
  explicit BoundMonitor(const energy::EnergyDefinition& energy);
  BoundSample record(const SpectralState& s);

 private:
  const energy::EnergyDefinition& energy_;
  algebra::DensityExpr cubic_;
  bool started_ = false;
  double last_t_ = 0.0;
  double last_integrand_ = 0.0;
  double integral_ = 0.0;
};

std::vector<BoundSample> bound_monitor(const energy::EnergyDefinition& energy,
                                       const std::vector<SpectralState>& trajectory);

}  // namespace nlsenergy::spectral
