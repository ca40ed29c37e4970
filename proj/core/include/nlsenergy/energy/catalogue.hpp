#pragma once

#include <string>
#include <vector>

#include "nlsenergy/algebra/density_expr.hpp"

namespace nlsenergy::energy {

using algebra::DensityExpr;

enum class Family { I, K, V, W };

char to_char(Family f);

// Basic densities (imaginary parts), for 0 <= h <= m with k = 3m + r:
//   I_{k,h} = Im int (d^{k-h}u)^2 d^{2h}u u^{p-2} ubar^{p+1}
//   K_{k,h} = Im int (d^{k-h}u)^2 d^{2h}ubar u^{p-1} ubar^{p}
//   V_{k,h} = Im int d^{k-h}u d^{k-h-1}ubar d^{2h+1}u u^{p-1} ubar^{p}
//   W_{k,h} = Im int d^{k-h}u d^{k-h-1}ubar d^{2h+1}ubar u^{p} ubar^{p-1}
DensityExpr basic_density(Family f, int k, int h, int p);

// Correction densities (real parts), for 1 <= h <= m+1:
//   I~_{k,h} = Re int (d^{k-h}u)^2 d^{2h-2}u ubar^{p+1} u^{p-2}
//   K~_{k,h} = Re int (d^{k-h}u)^2 d^{2h-2}ubar ubar^{p} u^{p-1}
//   V~_{k,h} = Re int |d^{k-h}u|^2 d^{2h-2}u ubar |u|^{2(p-1)}
//   W~_{k,h} = Re int d^{k-h}u d^{k-h-1}ubar d^{2h-1}u ubar^{p} u^{p-1}
DensityExpr correction_density(Family f, int k, int h, int p);

/// Im int (d^{2m}u)^3 u^{p-2} ubar^{p+1}; defined for k = 3m.
DensityExpr cubic_remainder(int k, int p);

struct CatalogueEntry {
  Family family;
  int h;
  std::string name;  // e.g. "Itilde_5_2"
  DensityExpr expr;
};

struct CorrectionCatalogue {
  int k = 0;
  int p = 0;
  std::vector<CatalogueEntry> entries;
};

struct CatalogueOptions {
  /// Test hook: doubles the first entry so that identity checks must fail.
  bool corrupt = false;
};

/// Entries ordered by h, then I~, V~, W~, K~ within each h. I~, V~, W~ run over
/// h = 1..m+1 and K~ over h = 2..m+1. Throws std::invalid_argument for k < 2 or p < 2.
CorrectionCatalogue build_catalogue(int k, int p, const CatalogueOptions& options = {});

std::string entry_name(Family f, int k, int h);

}  // namespace nlsenergy::energy
