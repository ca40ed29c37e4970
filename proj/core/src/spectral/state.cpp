#include "nlsenergy/spectral/state.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace nlsenergy::spectral {

SpectralState SpectralState::zeros(int n_modes) {
  if (n_modes < 2 || (n_modes & (n_modes - 1)) != 0)
    throw std::invalid_argument("mode count must be a power of two >= 2, got " + std::to_string(n_modes));
  SpectralState s;
  s.n_modes = n_modes;
  s.modes.assign(static_cast<std::size_t>(n_modes), cplx{});
  return s;
}

cplx& SpectralState::at(int n) {
  if (n < -n_modes / 2 || n >= n_modes / 2) throw std::out_of_range("wavenumber outside the band");
  return modes[static_cast<std::size_t>(slot(n, n_modes))];
}

cplx SpectralState::at(int n) const { return const_cast<SpectralState&>(*this).at(n); }

SpectralState plane_wave(int n_modes, cplx amplitude, int n) {
  auto s = SpectralState::zeros(n_modes);
  s.at(n) = amplitude;
  return s;
}

SpectralState random_state(std::uint64_t seed, int n_modes, double decay, double r_h1) {
  if (!(r_h1 > 0.0)) throw std::invalid_argument("target H^1 norm must be positive");
  auto s = SpectralState::zeros(n_modes);
  std::mt19937_64 gen(seed);
  // Explicit 53-bit draw: std::uniform_real_distribution is not specified bit-for-bit.
  auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  const int band = n_modes / 4;
  for (int n = -band; n <= band; ++n) {
    const double phase = 2.0 * std::numbers::pi * uniform();
    s.at(n) = std::pow(1.0 + std::abs(n), -decay) * std::polar(1.0, phase);
  }
  const double scale = r_h1 / sobolev_norm(s, 1);
  for (auto& a : s.modes) a *= scale;
  return s;
}

double sobolev_norm_squared(const SpectralState& s, int k) {
  if (k < 0) throw std::invalid_argument("Sobolev index must be non-negative");
  double sum = 0.0;
  for (int j = 0; j < s.n_modes; ++j) {
    const double n = SpectralState::wavenumber(j, s.n_modes);
    const double weight = k == 0 ? 1.0 : 1.0 + std::pow(n * n, k);
    sum += weight * std::norm(s.modes[static_cast<std::size_t>(j)]);
  }
  return 2.0 * std::numbers::pi * sum;
}

double sobolev_norm(const SpectralState& s, int k) { return std::sqrt(sobolev_norm_squared(s, k)); }

double momentum(const SpectralState& s) {
  double sum = 0.0;
  for (int j = 0; j < s.n_modes; ++j)
    sum += SpectralState::wavenumber(j, s.n_modes) * std::norm(s.modes[static_cast<std::size_t>(j)]);
  return 2.0 * std::numbers::pi * sum;
}

}  // namespace nlsenergy::spectral
