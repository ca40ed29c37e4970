#include "nlsenergy/algebra/operations.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace nlsenergy::algebra {
namespace {

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// Descending partitions of `total` into at most `slots` parts, each padded with
// zeros to exactly `slots` entries.
void partitions(int total, int slots, int max_part, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int first = std::min(total, max_part); first >= 0; --first) {
    if (first * slots < total) break;
    prefix.push_back(first);
    partitions(total - first, slots - 1, first, prefix, out);
    prefix.pop_back();
  }
}

// Sum over ordered distributions of `total` derivatives onto `slots` identical
// factors, grouped by the sorted outcome: total!/prod(parts!) times the number
// of distinct arrangements of the parts.
mpz_class grouped_leibniz_weight(const std::vector<int>& parts) {
  mpz_class w = factorial(std::accumulate(parts.begin(), parts.end(), 0));
  for (int c : parts) w /= factorial(c);
  mpz_class arrangements = factorial(static_cast<int>(parts.size()));
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    arrangements /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return w * arrangements;
}

struct PowerTerm {
  std::vector<int> same;   // orders on the p+1 factors sharing the replaced factor's conjugation
  std::vector<int> other;  // orders on the p factors of opposite conjugation
  mpz_class weight;
};

// d^a (f^{p+1} g^p) with f, g independent symbols.
std::vector<PowerTerm> expand_power(int a, int p) {
  std::vector<PowerTerm> out;
  for (int b = 0; b <= a; ++b) {
    const mpz_class split = factorial(a) / (factorial(b) * factorial(a - b));
    std::vector<std::vector<int>> same_parts;
    std::vector<std::vector<int>> other_parts;
    std::vector<int> scratch;
    partitions(b, p + 1, b, scratch, same_parts);
    partitions(a - b, p, a - b, scratch, other_parts);
    for (const auto& s : same_parts) {
      const mpz_class ws = grouped_leibniz_weight(s);
      for (const auto& o : other_parts) out.push_back({s, o, split * ws * grouped_leibniz_weight(o)});
    }
  }
  return out;
}

}  // namespace

DensityExpr conjugate(const DensityExpr& e) {
  DensityExpr out;
  for (const auto& [m, c] : e.terms()) out.add_term(m.conjugate(), c.conj());
  return out;
}

DensityExpr re_part(const DensityExpr& e) {
  return (e + conjugate(e)) * Coefficient(mpq_class(1, 2));
}

DensityExpr im_part(const DensityExpr& e) {
  // (e - conj e) / (2i) = (-i/2)(e - conj e)
  return (e - conjugate(e)) * Coefficient(0, mpq_class(-1, 2));
}

DensityExpr star(const DensityExpr& e) {
  const Coefficient plus_i = Coefficient::imaginary_unit();
  const Coefficient minus_i = -plus_i;
  DensityExpr out;
  for (const auto& [m, c] : e.terms()) {
    const Coefficient cu = c * plus_i;
    const Coefficient cb = c * minus_i;
    for (std::size_t l = 0; l < m.u_orders().size(); ++l) {
      auto u = m.u_orders();
      u[l] += 2;
      out.add_term(Monomial(std::move(u), m.ubar_orders()), cu);
    }
    for (std::size_t l = 0; l < m.ubar_orders().size(); ++l) {
      auto ub = m.ubar_orders();
      ub[l] += 2;
      out.add_term(Monomial(m.u_orders(), std::move(ub)), cb);
    }
  }
  return out;
}

DensityExpr starstar(const DensityExpr& e, int p) {
  if (p < 1) throw std::invalid_argument("starstar: p must be positive");
  std::map<int, std::vector<PowerTerm>> cache;
  auto expansion = [&](int a) -> const std::vector<PowerTerm>& {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, expand_power(a, p)).first;
    return it->second;
  };

  DensityExpr out;
  for (const auto& [m, c] : e.terms()) {
    // Unconjugated factor d^a u -> -i d^a(u^{p+1} ubar^p).
    const Coefficient cu = c * Coefficient(0, -1);
    for (std::size_t l = 0; l < m.u_orders().size(); ++l) {
      std::vector<int> rest = m.u_orders();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
      for (const auto& t : expansion(m.u_orders()[l])) {
        std::vector<int> u = rest;
        u.insert(u.end(), t.same.begin(), t.same.end());
        std::vector<int> ub = m.ubar_orders();
        ub.insert(ub.end(), t.other.begin(), t.other.end());
        out.add_term(Monomial(std::move(u), std::move(ub)), cu * Coefficient(mpq_class(t.weight)));
      }
    }
    // Conjugated factor d^a ubar -> +i d^a(ubar^{p+1} u^p).
    const Coefficient cb = c * Coefficient(0, 1);
    for (std::size_t l = 0; l < m.ubar_orders().size(); ++l) {
      std::vector<int> rest = m.ubar_orders();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
      for (const auto& t : expansion(m.ubar_orders()[l])) {
        std::vector<int> ub = rest;
        ub.insert(ub.end(), t.same.begin(), t.same.end());
        std::vector<int> u = m.u_orders();
        u.insert(u.end(), t.other.begin(), t.other.end());
        out.add_term(Monomial(std::move(u), std::move(ub)), cb * Coefficient(mpq_class(t.weight)));
      }
    }
  }
  return out;
}

DensityExpr time_derivative(const DensityExpr& e, int p) { return star(e) + starstar(e, p); }

}  // namespace nlsenergy::algebra
