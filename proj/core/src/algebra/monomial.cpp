#include "nlsenergy/algebra/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlsenergy::algebra {

std::string to_string(const Signature& sig) {
  return "(" + std::to_string(sig.n_u) + "," + std::to_string(sig.n_ubar) + "," +
         std::to_string(sig.total_derivs) + ")";
}

Monomial::Monomial(std::vector<int> u_orders, std::vector<int> ubar_orders)
    : u_(std::move(u_orders)), ubar_(std::move(ubar_orders)) {
  auto check = [](const std::vector<int>& v) {
    for (int o : v)
      if (o < 0) throw std::invalid_argument("Monomial: negative derivative order");
  };
  check(u_);
  check(ubar_);
  std::sort(u_.begin(), u_.end(), std::greater<>());
  std::sort(ubar_.begin(), ubar_.end(), std::greater<>());
}

Signature Monomial::signature() const {
  int total = 0;
  for (int o : u_) total += o;
  for (int o : ubar_) total += o;
  return {static_cast<int>(u_.size()), static_cast<int>(ubar_.size()), total};
}

int Monomial::max_order() const { return std::max(max_u_order(), max_ubar_order()); }

int Monomial::derivative_bearing() const {
  auto positive = [](int o) { return o > 0; };
  return static_cast<int>(std::count_if(u_.begin(), u_.end(), positive) +
                          std::count_if(ubar_.begin(), ubar_.end(), positive));
}

std::vector<Factor> Monomial::factors() const {
  std::vector<Factor> out;
  out.reserve(factor_count());
  for (int o : u_) out.push_back({o, false});
  for (int o : ubar_) out.push_back({o, true});
  return out;
}

Monomial canonicalize(std::span<const Factor> factors) {
  std::vector<int> u;
  std::vector<int> ubar;
  for (const auto& f : factors) (f.conjugated ? ubar : u).push_back(f.order);
  return {std::move(u), std::move(ubar)};
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int o : m.u_orders()) mix(static_cast<std::size_t>(o));
  mix(0xffffULL);
  for (int o : m.ubar_orders()) mix(static_cast<std::size_t>(o));
  return h;
}

}  // namespace nlsenergy::algebra
