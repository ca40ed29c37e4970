#include "nlsenergy/spectral/evaluate.hpp"

#include <cmath>
#include <numbers>

#include "nlsenergy/spectral/fft.hpp"

namespace nlsenergy::spectral {
namespace {

using algebra::Coefficient;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// i^e as an exact Gaussian unit.
Coefficient i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return Coefficient(1);
    case 1: return Coefficient::imaginary_unit();
    case 2: return Coefficient(-1);
    default: return -Coefficient::imaginary_unit();
  }
}

cplx to_complex(const Coefficient& c) { return {c.re().get_d(), c.im().get_d()}; }

// J = phase * S(d) where S depends only on the sector:
//   u ubar:       J = 2pi i^a (-i)^b       sum n^d |uhat(n)|^2
//   u u:          J = 2pi i^d (-1)^b       sum n^d uhat(n) uhat(-n)
//   ubar ubar:    J = conj of the u u case with the same orders
Coefficient quadratic_phase(const Monomial& m) {
  const auto& uo = m.u_orders();
  const auto& vo = m.ubar_orders();
  if (uo.size() == 1) return i_power(uo[0]) * i_power(-vo[0]);
  const auto& o = uo.empty() ? vo : uo;
  Coefficient ph = i_power(o[0] + o[1]) * Coefficient(o[1] % 2 == 0 ? 1 : -1);
  return uo.empty() ? ph.conj() : ph;
}

cplx quadratic_sector_sum(const SpectralState& s, const algebra::Signature& sig) {
  const int d = sig.total_derivs;
  const int half = s.n_modes / 2;
  cplx sum{};
  for (int n = -half; n < half; ++n) {
    const double w = d == 0 ? 1.0 : std::pow(static_cast<double>(n), d);
    if (sig.n_u == 1) {
      sum += w * std::norm(s.at(n));
    } else if (-n < half) {
      const cplx pair = s.at(n) * s.at(-n);
      sum += w * (sig.n_u == 2 ? pair : std::conj(pair));
    }
  }
  return kTwoPi * sum;
}

}  // namespace

Evaluator::Evaluator(const SpectralState& state, int padding) : state_(state), padding_(padding) {
  if (padding < 0) throw std::invalid_argument("padding must be non-negative");
}

const std::vector<cplx>& Evaluator::field(int grid, int order) {
  auto [it, inserted] = fields_.try_emplace({grid, order});
  if (!inserted) return it->second;
  Fft& fft = thread_fft<double>(grid);
  cplx* a = fft.data();
  std::fill(a, a + grid, cplx{});
  const cplx i_unit(0.0, 1.0);
  for (int j = 0; j < state_.n_modes; ++j) {
    const int n = SpectralState::wavenumber(j, state_.n_modes);
    a[SpectralState::slot(n, grid)] = std::pow(i_unit * static_cast<double>(n), order) * state_.modes[j];
  }
  if (order > 0) a[SpectralState::slot(0, grid)] = 0.0;
  fft.backward();
  it->second.assign(a, a + grid);
  return it->second;
}

cplx Evaluator::quadratic(const Monomial& m) const {
  return to_complex(quadratic_phase(m)) * quadratic_sector_sum(state_, m.signature());
}

cplx Evaluator::monomial(const Monomial& m) {
  const int factors = static_cast<int>(m.factor_count());
  if (factors == 0) return kTwoPi;
  const int padding = padding_ == 0 ? factors : padding_;
  if (padding < factors)
    throw InsufficientPadding("monomial with " + std::to_string(factors) + " factors needs padding >= " +
                              std::to_string(factors) + ", got " + std::to_string(padding));
  const int grid = padding * state_.n_modes;
  std::vector<cplx> prod(static_cast<std::size_t>(grid), cplx(1.0, 0.0));
  for (int o : m.u_orders()) {
    const auto& f = field(grid, o);
    for (int x = 0; x < grid; ++x) prod[x] *= f[x];
  }
  for (int o : m.ubar_orders()) {
    const auto& f = field(grid, o);
    for (int x = 0; x < grid; ++x) prod[x] *= std::conj(f[x]);
  }
  cplx sum{};
  for (const auto& v : prod) sum += v;
  return kTwoPi * sum / static_cast<double>(grid);
}

cplx Evaluator::quadratic_sum(const DensityExpr& e, double& scale) const {
  std::map<algebra::Signature, Coefficient> combined;
  for (const auto& [m, c] : e.terms()) {
    if (m.factor_count() != 2) continue;
    combined[m.signature()] += c * quadratic_phase(m);
    scale += std::abs(to_complex(c) * quadratic(m));
  }
  cplx sum{};
  for (const auto& [sig, c] : combined)
    if (!c.is_zero()) sum += to_complex(c) * quadratic_sector_sum(state_, sig);
  return sum;
}

cplx Evaluator::expression(const DensityExpr& e) {
  double scale = 0.0;
  cplx sum = quadratic_sum(e, scale);
  for (const auto& [m, c] : e.terms())
    if (m.factor_count() != 2) sum += to_complex(c) * monomial(m);
  return sum;
}

double Evaluator::real_expression(const DensityExpr& e, double tolerance) {
  double scale = 0.0;
  cplx sum = quadratic_sum(e, scale);
  for (const auto& [m, c] : e.terms()) {
    if (m.factor_count() == 2) continue;
    const cplx v = to_complex(c) * monomial(m);
    sum += v;
    scale += std::abs(v);
  }
  if (std::abs(sum.imag()) > tolerance * scale)
    throw ImaginaryResidue("density evaluates with imaginary part " + std::to_string(sum.imag()) +
                           " against term scale " + std::to_string(scale));
  return sum.real();
}

std::vector<std::pair<Monomial, cplx>> Evaluator::terms(const DensityExpr& e) {
  std::vector<std::pair<Monomial, cplx>> out;
  out.reserve(e.size());
  for (const auto& [m, c] : e.terms())
    out.emplace_back(m, to_complex(c) * (m.factor_count() == 2 ? quadratic(m) : monomial(m)));
  return out;
}

cplx evaluate_monomial(const Monomial& m, const SpectralState& state, int padding) {
  Evaluator ev(state, padding);
  return m.factor_count() == 2 && padding == 0 ? ev.terms(DensityExpr(m)).front().second : ev.monomial(m);
}

double evaluate_expr(const DensityExpr& e, const SpectralState& state, int padding) {
  return Evaluator(state, padding).real_expression(e);
}

double hamiltonian(const SpectralState& state, int p) {
  Evaluator ev(state);
  const std::vector<int> zeros(static_cast<std::size_t>(p + 1), 0);
  const double kinetic = ev.monomial(Monomial({1}, {1})).real();
  const double potential = ev.monomial(Monomial(zeros, zeros)).real();
  return kinetic + potential / (p + 1);
}

}  // namespace nlsenergy::spectral
