#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nlsenergy::algebra {

/// One factor of a density: d^order u, or d^order conj(u) when conjugated.
struct Factor {
  int order = 0;
  bool conjugated = false;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Sector label of a density: factor counts and total number of derivatives.
struct Signature {
  int n_u = 0;
  int n_ubar = 0;
  int total_derivs = 0;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);

/// The integral over the torus of a product of derivatives of u and conj(u).
///
/// Canonical form: both order lists sorted descending. Ordering compares the
/// unconjugated list first, then the conjugated list, lexicographically.
class Monomial {
 public:
  Monomial() = default;
  /// Sorts both lists. Throws std::invalid_argument on a negative order.
  Monomial(std::vector<int> u_orders, std::vector<int> ubar_orders);

  const std::vector<int>& u_orders() const { return u_; }
  const std::vector<int>& ubar_orders() const { return ubar_; }

  Signature signature() const;
  std::size_t factor_count() const { return u_.size() + ubar_.size(); }
  int max_order() const;
  int max_u_order() const { return u_.empty() ? 0 : u_.front(); }
  int max_ubar_order() const { return ubar_.empty() ? 0 : ubar_.front(); }
  /// Number of factors carrying at least one derivative.
  int derivative_bearing() const;

  std::vector<Factor> factors() const;
  Monomial conjugate() const { return Monomial(ubar_, u_, Sorted{}); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  struct Sorted {};
  Monomial(std::vector<int> u, std::vector<int> ubar, Sorted) : u_(std::move(u)), ubar_(std::move(ubar)) {}

  std::vector<int> u_;
  std::vector<int> ubar_;
};

/// Builds the canonical monomial of an arbitrary factor list.
Monomial canonicalize(std::span<const Factor> factors);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace nlsenergy::algebra

template <>
struct std::hash<nlsenergy::algebra::Monomial> : nlsenergy::algebra::MonomialHash {};
