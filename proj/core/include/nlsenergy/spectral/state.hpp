#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nlsenergy::spectral {

using cplx = std::complex<double>;

/// A grid or transform is too coarse for an exact (alias-free) result.
class InsufficientPadding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u(x) = sum_{-N/2 <= n < N/2} uhat(n) e^{inx} on [0, 2pi).
/// Amplitudes are stored in transform order: slot j holds n = j for j < N/2
/// and n = j - N otherwise.
struct SpectralState {
  int n_modes = 0;
  double t = 0.0;
  std::vector<cplx> modes;

  /// Throws std::invalid_argument unless n_modes is a power of two >= 2.
  static SpectralState zeros(int n_modes);

  static int wavenumber(int slot, int n_modes) { return slot < n_modes / 2 ? slot : slot - n_modes; }
  static int slot(int n, int n_modes) { return n >= 0 ? n : n + n_modes; }

  /// n must lie in [-N/2, N/2).
  cplx& at(int n);
  cplx at(int n) const;

  friend bool operator==(const SpectralState&, const SpectralState&) = default;
};

/// amplitude * e^{i n x}
SpectralState plane_wave(int n_modes, cplx amplitude, int n);

/// Random phases on |n| <= N/4 with moduli (1+|n|)^{-decay}, rescaled to
/// ||u||_{H^1} = r_h1. Bit-identical for identical arguments.
SpectralState random_state(std::uint64_t seed, int n_modes, double decay, double r_h1);

/// 2 pi sum (1 + n^{2k}) |uhat|^2; for k = 0 this is the plain L^2 norm squared.
double sobolev_norm_squared(const SpectralState& s, int k);
double sobolev_norm(const SpectralState& s, int k);
/// 2 pi sum n |uhat|^2
double momentum(const SpectralState& s);

}  // namespace nlsenergy::spectral
