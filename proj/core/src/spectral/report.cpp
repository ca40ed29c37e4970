#include "nlsenergy/spectral/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "nlsenergy/spectral/evaluate.hpp"

namespace nlsenergy::spectral {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    const double cols[] = {r.t,  r.l2,      r.h1,     r.hk,      r.hamiltonian,    r.E_k,
                           r.F_k, r.dEk_fd, r.dEk_exact, r.cubic_remainder, r.bound_ratio};
    bool first = true;
    for (double c : cols) {
      if (!first) os << ',';
      os << format_double(c);
      first = false;
    }
    os << '\n';
  }
}

std::vector<ReportRow> run_trajectory(const energy::EnergyDefinition& energy, SpectralState state,
                                      const SolverConfig& config, const TrajectoryOptions& options) {
  if (config.dt <= 0.0) throw std::invalid_argument("trajectory time step must be positive");
  if (config.record_stride < 1) throw std::invalid_argument("record stride must be positive");
  if (!(options.fd_dt > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const Solver solver(state.n_modes, energy.p, config);
  BoundMonitor monitor(energy);
  const DensityExpr e_k = energy::energy_expression(energy);
  const long total = std::lround(config.t_end / config.dt);
  const double t0 = state.t;
  SolverConfig fd_config = config;
  fd_config.dt = options.fd_dt;

  std::vector<ReportRow> rows;
  for (long i = 0;; ++i) {
    if (i % config.record_stride == 0 || i == total) {
      state.t = t0 + static_cast<double>(i) * config.dt;
      const auto check = derivative_crosscheck(energy, state, fd_config, options.fd_steps);
      const auto bound = monitor.record(state);
      ReportRow row;
      row.t = state.t;
      row.l2 = sobolev_norm(state, 0);
      row.h1 = sobolev_norm(state, 1);
      row.hk = bound.hk;
      row.hamiltonian = hamiltonian(state, energy.p);
      row.E_k = check.energy;
      row.F_k = bound.F;
      row.dEk_fd = check.fd;
      row.dEk_exact = check.exact;
      row.cubic_remainder = bound.cubic_integral;
      row.bound_ratio = bound.ratio;
      rows.push_back(row);
      if (options.on_record) options.on_record(state, bound);
    }
    if (i == total) break;
    solver.step(state);
  }
  return rows;
}

}  // namespace nlsenergy::spectral
