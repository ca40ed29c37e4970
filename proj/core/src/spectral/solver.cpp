#include "nlsenergy/spectral/solver.hpp"

#include <algorithm>
#include <cmath>

#include "nlsenergy/spectral/fft.hpp"

namespace nlsenergy::spectral {

Solver::Solver(int n_modes, int p, const SolverConfig& config) : n_modes_(n_modes), p_(p), config_(config) {
  (void)SpectralState::zeros(n_modes);  // validates the mode count
  if (p < 1) throw std::invalid_argument("nonlinearity power must be at least 1");
  if (config_.dt == 0.0 || !std::isfinite(config_.dt)) throw std::invalid_argument("time step must be finite and nonzero");
  if (config_.padding_factor == 0) config_.padding_factor = p + 1;
  if (config_.padding_factor < p + 1)
    throw InsufficientPadding("solver padding factor " + std::to_string(config_.padding_factor) + " is below p+1 = " +
                              std::to_string(p + 1));
  grid_ = config_.padding_factor * n_modes;
  half_phase_.assign(static_cast<std::size_t>(grid_), ext{});
  const long double dt = config_.dt;
  for (int j = 0; j < n_modes; ++j) {
    const long double n = SpectralState::wavenumber(j, n_modes);
    half_phase_[SpectralState::slot(static_cast<int>(n), grid_)] = std::polar(1.0L, -n * n * dt / 2.0L);
  }
}

void Solver::linear_half(ext* a) const {
  for (int j = 0; j < n_modes_; ++j) {
    const int slot = SpectralState::slot(SpectralState::wavenumber(j, n_modes_), grid_);
    a[slot] *= half_phase_[slot];
  }
}

void Solver::step(SpectralState& s) const {
  if (s.n_modes != n_modes_) throw std::invalid_argument("state does not match the solver's mode count");
  ExtendedFft& fft = thread_fft<long double>(grid_);
  ext* a = fft.data();
  std::fill(a, a + grid_, ext{});
  for (int j = 0; j < n_modes_; ++j)
    a[SpectralState::slot(SpectralState::wavenumber(j, n_modes_), grid_)] = ext(s.modes[j].real(), s.modes[j].imag());

  linear_half(a);
  if (!config_.linear_only) {
    fft.backward();
    const long double dt = config_.dt;
    const long double inv = 1.0L / grid_;
    for (int x = 0; x < grid_; ++x) {
      const long double rho = std::pow(std::norm(a[x]), static_cast<long double>(p_));
      a[x] *= std::polar(inv, -rho * dt);
    }
    fft.forward();
  }
  linear_half(a);

  for (int j = 0; j < n_modes_; ++j) {
    const ext v = a[SpectralState::slot(SpectralState::wavenumber(j, n_modes_), grid_)];
    s.modes[j] = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    if (!std::isfinite(s.modes[j].real()) || !std::isfinite(s.modes[j].imag()))
      throw NonFiniteState("non-finite amplitude at t = " + std::to_string(s.t));
  }
  s.t += config_.dt;
}

void Solver::advance(SpectralState& s, double duration) const {
  const long steps = std::lround(std::abs(duration / config_.dt));
  for (long i = 0; i < steps; ++i) step(s);
}

}  // namespace nlsenergy::spectral
