#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlsenergy::algebra {

/// Exact Gaussian rational re + im*i. Both parts are kept in GMP canonical form
/// (gcd-reduced, positive denominator).
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Coefficient(mpq_class re, mpq_class im = 0);

  static Coefficient imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Coefficient conj() const { return {re_, -im_}; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  /// Throws std::domain_error on division by zero.
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form `a/b`, `c/d*i` or `a/b+c/d*i`; integers drop the denominator.
  std::string to_string() const;
  /// Inverse of to_string(). Throws std::invalid_argument on malformed input.
  static Coefficient parse(std::string_view text);

 private:
  mpq_class re_;
  mpq_class im_;
};

std::string rational_to_string(const mpq_class& q);
/// Parses `a` or `a/b` with optional sign; rejects zero denominators.
mpq_class parse_rational(std::string_view text);

}  // namespace nlsenergy::algebra
