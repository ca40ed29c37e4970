#include "nlsenergy/energy/catalogue.hpp"

#include <stdexcept>

#include "nlsenergy/algebra/operations.hpp"

namespace nlsenergy::energy {
namespace {

using algebra::Monomial;

std::vector<int> with_zeros(std::vector<int> orders, int zeros) {
  if (zeros < 0) throw std::invalid_argument("density requires a negative number of plain factors");
  orders.insert(orders.end(), static_cast<std::size_t>(zeros), 0);
  return orders;
}

DensityExpr single(std::vector<int> u, std::vector<int> ubar) {
  return DensityExpr(Monomial(std::move(u), std::move(ubar)));
}

void check_kp(int k, int p) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (p < 2) throw std::invalid_argument("p must be at least 2");
}

}  // namespace

char to_char(Family f) {
  switch (f) {
    case Family::I: return 'I';
    case Family::K: return 'K';
    case Family::V: return 'V';
    case Family::W: return 'W';
  }
  return '?';
}

std::string entry_name(Family f, int k, int h) {
  return std::string(1, to_char(f)) + "tilde_" + std::to_string(k) + "_" + std::to_string(h);
}

DensityExpr basic_density(Family f, int k, int h, int p) {
  check_kp(k, p);
  const int a = k - h;
  switch (f) {
    case Family::I:
      return algebra::im_part(single(with_zeros({a, a, 2 * h}, p - 2), with_zeros({}, p + 1)));
    case Family::K:
      return algebra::im_part(single(with_zeros({a, a}, p - 1), with_zeros({2 * h}, p)));
    case Family::V:
      return algebra::im_part(single(with_zeros({a, 2 * h + 1}, p - 1), with_zeros({a - 1}, p)));
    case Family::W:
      return algebra::im_part(single(with_zeros({a}, p), with_zeros({a - 1, 2 * h + 1}, p - 1)));
  }
  throw std::invalid_argument("unknown density family");
}

DensityExpr correction_density(Family f, int k, int h, int p) {
  check_kp(k, p);
  if (h < 1) throw std::invalid_argument("correction densities start at h = 1");
  const int a = k - h;
  switch (f) {
    case Family::I:
      return algebra::re_part(single(with_zeros({a, a, 2 * h - 2}, p - 2), with_zeros({}, p + 1)));
    case Family::K:
      return algebra::re_part(single(with_zeros({a, a}, p - 1), with_zeros({2 * h - 2}, p)));
    case Family::V:
      return algebra::re_part(single(with_zeros({a, 2 * h - 2}, p - 1), with_zeros({a}, p)));
    case Family::W:
      return algebra::re_part(single(with_zeros({a, 2 * h - 1}, p - 1), with_zeros({a - 1}, p)));
  }
  throw std::invalid_argument("unknown density family");
}

DensityExpr cubic_remainder(int k, int p) {
  if (k % 3 != 0) throw std::invalid_argument("cubic remainder exists only for k divisible by 3");
  return basic_density(Family::I, k, k / 3, p);
}

CorrectionCatalogue build_catalogue(int k, int p, const CatalogueOptions& options) {
  check_kp(k, p);
  const int m = k / 3;
  CorrectionCatalogue cat{k, p, {}};
  for (int h = 1; h <= m + 1; ++h) {
    for (Family f : {Family::I, Family::V, Family::W, Family::K}) {
      if (f == Family::K && h < 2) continue;
      cat.entries.push_back({f, h, entry_name(f, k, h), correction_density(f, k, h, p)});
    }
  }
  if (options.corrupt && !cat.entries.empty()) cat.entries.front().expr *= algebra::Coefficient(2);
  return cat;
}

}  // namespace nlsenergy::energy
