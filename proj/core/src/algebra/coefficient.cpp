#include "nlsenergy/algebra/coefficient.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nlsenergy::algebra {

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("Coefficient: division by zero");
  const mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  const auto slash = text.find('/');
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto num = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (pos == 1 && text[0] == '-') n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string Coefficient::to_string() const {
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return rational_to_string(re_);
  std::string im_text = rational_to_string(abs(im_)) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_text;
  return rational_to_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_text;
}

Coefficient Coefficient::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  if (!text.ends_with("*i")) return {parse_rational(text), 0};
  auto body = text.substr(0, text.size() - 2);
  // The sign separating real and imaginary parts is the last +/- not at position 0.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, parse_rational(body)};
  return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
}

}  // namespace nlsenergy::algebra
