#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlsenergy/algebra/density_expr.hpp"

namespace nlsenergy::algebra {

// Stable text form used by golden files and energy documents. One term per
// line, in ascending monomial order:
//
//   <coeff> * d^i1[u] d^i2[u] ... d^j1[conj(u)] ...
//
// with <coeff> as printed by Coefficient::to_string(). The empty monomial is
// written `1`; the zero expression is the single line `0`.

std::string to_text(const Monomial& m);
std::string term_to_text(const Monomial& m, const Coefficient& c);

std::vector<std::string> to_text_lines(const DensityExpr& e);
std::string to_text(const DensityExpr& e);

/// Throws std::invalid_argument on malformed input.
Monomial parse_monomial(std::string_view text);
DensityExpr parse_term(std::string_view line);
DensityExpr parse_text(std::string_view text);
DensityExpr parse_lines(const std::vector<std::string>& lines);

}  // namespace nlsenergy::algebra
