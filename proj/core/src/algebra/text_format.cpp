#include "nlsenergy/algebra/text_format.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace nlsenergy::algebra {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_text(const Monomial& m) {
  if (m.factor_count() == 0) return "1";
  std::string out;
  for (int o : m.u_orders()) {
    if (!out.empty()) out += ' ';
    out += "d^" + std::to_string(o) + "[u]";
  }
  for (int o : m.ubar_orders()) {
    if (!out.empty()) out += ' ';
    out += "d^" + std::to_string(o) + "[conj(u)]";
  }
  return out;
}

std::string term_to_text(const Monomial& m, const Coefficient& c) { return c.to_string() + " * " + to_text(m); }

std::vector<std::string> to_text_lines(const DensityExpr& e) {
  std::vector<std::string> out;
  out.reserve(e.size());
  for (const auto& [m, c] : e.terms()) out.push_back(term_to_text(m, c));
  return out;
}

std::string to_text(const DensityExpr& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& line : to_text_lines(e)) {
    if (!out.empty()) out += '\n';
    out += line;
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  text = trim(text);
  if (text == "1") return {};
  std::vector<int> u;
  std::vector<int> ubar;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (!tok.starts_with("d^")) throw std::invalid_argument("malformed factor '" + tok + "'");
    const auto bracket = tok.find('[');
    if (bracket == std::string::npos) throw std::invalid_argument("malformed factor '" + tok + "'");
    int order = -1;
    const char* first = tok.data() + 2;
    const char* last = tok.data() + bracket;
    auto [ptr, ec] = std::from_chars(first, last, order);
    if (ec != std::errc() || ptr != last || order < 0) throw std::invalid_argument("bad order in '" + tok + "'");
    const std::string_view tail(tok.data() + bracket, tok.size() - bracket);
    if (tail == "[u]")
      u.push_back(order);
    else if (tail == "[conj(u)]")
      ubar.push_back(order);
    else
      throw std::invalid_argument("unknown symbol in '" + tok + "'");
  }
  return {std::move(u), std::move(ubar)};
}

DensityExpr parse_term(std::string_view line) {
  line = trim(line);
  if (line == "0") return {};
  const auto sep = line.find(" * ");
  if (sep == std::string_view::npos) throw std::invalid_argument("term without ' * ': '" + std::string(line) + "'");
  return DensityExpr(parse_monomial(line.substr(sep + 3)), Coefficient::parse(line.substr(0, sep)));
}

DensityExpr parse_text(std::string_view text) {
  DensityExpr out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    if (!line.empty()) out += parse_term(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

DensityExpr parse_lines(const std::vector<std::string>& lines) {
  DensityExpr out;
  for (const auto& l : lines) out += parse_term(l);
  return out;
}

}  // namespace nlsenergy::algebra
