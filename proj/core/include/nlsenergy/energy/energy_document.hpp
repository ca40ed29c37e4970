#pragma once

#include <stdexcept>
#include <string>

#include "nlsenergy/energy/energy.hpp"

namespace nlsenergy::energy {

inline constexpr const char* kEnergySchema = "nlsenergy.energy";
inline constexpr int kEnergySchemaVersion = 1;

/// Unreadable, incomplete or wrongly versioned energy document.
class MalformedDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON text; rationals as "a/b" strings, densities as arrays of terms.
/// Output is deterministic for a given energy.
std::string export_energy(const EnergyDefinition& energy);

/// Parses and validates. Throws MalformedDocument for syntax, schema or
/// version problems and InvariantViolation when the content is inconsistent.
EnergyDefinition import_energy(const std::string& document);

}  // namespace nlsenergy::energy
