#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "nlsenergy/spectral/state.hpp"

namespace nlsenergy::spectral {

/// Amplitudes became NaN or infinite.
class NonFiniteState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverConfig {
  double dt = 1e-3;        // negative steps run the flow backwards
  int padding_factor = 0;  // 0 selects p + 1
  double t_end = 1.0;
  int record_stride = 100;
  bool linear_only = false;  // diagnostic: drop the nonlinear substep
};

/// Strang splitting for i u_t + u_xx - u |u|^{2p} = 0 with exact substeps:
/// half linear step, pointwise phase rotation u e^{-i |u|^{2p} dt} on the
/// padded grid, half linear step, truncation back to N modes.
///
/// A step is carried out in long double and rounded to double once at the
/// end. Transform round-off is absolute (relative to the largest mode), and
/// norms weighted by n^{2k} amplify it in the small high modes; the extended
/// step keeps it below what central differences of E_k can resolve.
class Solver {
 public:
  /// Throws InsufficientPadding when padding_factor < p + 1 and
  /// std::invalid_argument for dt == 0 or p < 1.
  Solver(int n_modes, int p, const SolverConfig& config);

  void step(SpectralState& s) const;
  /// Runs round(duration / |dt|) steps in the direction of dt.
  void advance(SpectralState& s, double duration) const;

  const SolverConfig& config() const { return config_; }
  int p() const { return p_; }

 private:
  using ext = std::complex<long double>;
  void linear_half(ext* a) const;

  int n_modes_;
  int p_;
  SolverConfig config_;
  int grid_;
  std::vector<ext> half_phase_;  // e^{-i n^2 dt / 2}, indexed by padded-grid slot
};

}  // namespace nlsenergy::spectral
