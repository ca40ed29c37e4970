#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nlsenergy/energy/energy.hpp"
#include "nlsenergy/spectral/monitors.hpp"
#include "nlsenergy/spectral/solver.hpp"
#include "nlsenergy/spectral/state.hpp"

namespace nlsenergy::spectral {

struct ReportRow {
  double t = 0.0;
  double l2 = 0.0;
  double h1 = 0.0;
  double hk = 0.0;
  double hamiltonian = 0.0;
  double E_k = 0.0;
  double F_k = 0.0;
  double dEk_fd = 0.0;
  double dEk_exact = 0.0;
  double cubic_remainder = 0.0;  // running time integral of the cubic integrand
  double bound_ratio = 0.0;
};

inline constexpr const char* kCsvHeader =
    "t,l2,h1,hk,hamiltonian,E_k,F_k,dEk_fd,dEk_exact,cubic_remainder,bound_ratio";

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);

struct TrajectoryOptions {
  int fd_steps = 10;     // central-difference half-width in solver steps
  double fd_dt = 4e-7;   // solver step inside the central difference
  /// Called once per recorded row with the state and its monitor sample.
  std::function<void(const SpectralState&, const BoundSample&)> on_record;
};

/// Integrates from `initial` to config.t_end, recording every
/// config.record_stride steps (and at t = 0). Throws NonFiniteState on blow-up.
std::vector<ReportRow> run_trajectory(const energy::EnergyDefinition& energy, SpectralState initial,
                                      const SolverConfig& config, const TrajectoryOptions& options = {});

}  // namespace nlsenergy::spectral
