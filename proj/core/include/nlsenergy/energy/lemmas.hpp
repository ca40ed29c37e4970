#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlsenergy/energy/catalogue.hpp"

namespace nlsenergy::energy {

/// One star identity  star(C~) == rhs  checked modulo IBP and Omega_k.
struct LemmaIdentity {
  std::string label;  // e.g. "first.W", "middle.K.h2", "top.3m+1"
  DensityExpr lhs;
  DensityExpr rhs;
};

struct LemmaCheck {
  std::string label;
  bool passed = false;
  std::size_t certificate_size = 0;  // nonzero generator weights + allowed monomials used
};

struct LemmaReport {
  int k = 0;
  int p = 0;
  std::vector<LemmaCheck> checks;

  bool all_passed() const;
};

/// Every identity applicable at (k, p). Left-hand sides are taken from the
/// catalogue built with `options`, so a corrupted catalogue yields false identities.
std::vector<LemmaIdentity> lemma_identities(int k, int p, const CatalogueOptions& options = {});

LemmaReport verify_lemmas(int k, int p, const CatalogueOptions& options = {});

}  // namespace nlsenergy::energy
