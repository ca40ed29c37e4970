#include "nlsenergy/energy/energy_document.hpp"

#include <nlohmann/json.hpp>

#include "nlsenergy/algebra/text_format.hpp"

namespace nlsenergy::energy {
namespace {

using json = nlohmann::ordered_json;

json density_to_json(const DensityExpr& e) {
  json arr = json::array();
  for (const auto& line : algebra::to_text_lines(e)) arr.push_back(line);
  return arr;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw MalformedDocument(std::string("missing field '") + name + "'");
  return *it;
}

DensityExpr density_from_json(const json& doc, const char* name) {
  const json& arr = field(doc, name);
  if (!arr.is_array()) throw MalformedDocument(std::string("field '") + name + "' must be an array of terms");
  std::vector<std::string> lines;
  for (const auto& v : arr) {
    if (!v.is_string()) throw MalformedDocument(std::string("field '") + name + "' must be an array of terms");
    lines.push_back(v.get<std::string>());
  }
  try {
    return algebra::parse_lines(lines);
  } catch (const std::exception& ex) {
    throw MalformedDocument(std::string("field '") + name + "': " + ex.what());
  }
}

mpq_class rational_from_json(const json& v, const std::string& what) {
  if (!v.is_string()) throw MalformedDocument(what + " must be a rational string");
  try {
    return algebra::parse_rational(v.get<std::string>());
  } catch (const std::exception& ex) {
    throw MalformedDocument(what + ": " + ex.what());
  }
}

int int_from_json(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw MalformedDocument(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

}  // namespace

std::string export_energy(const EnergyDefinition& e) {
  json doc;
  doc["schema"] = kEnergySchema;
  doc["version"] = kEnergySchemaVersion;
  doc["k"] = e.k;
  doc["p"] = e.p;
  json coeffs = json::object();
  for (const auto& [name, value] : e.coefficients) coeffs[name] = algebra::rational_to_string(value);
  doc["coefficients"] = std::move(coeffs);
  doc["cubic_coeff"] = algebra::rational_to_string(e.cubic_coeff);
  doc["F_k"] = density_to_json(e.F_k);
  doc["residual_omega"] = density_to_json(e.residual_omega);
  doc["residual_theta"] = density_to_json(e.residual_theta);
  doc["exact_derivative"] = density_to_json(e.exact_derivative);
  return doc.dump(2) + "\n";
}

EnergyDefinition import_energy(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& ex) {
    throw MalformedDocument(std::string("not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw MalformedDocument("energy document must be a JSON object");
  const json& schema = field(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kEnergySchema)
    throw MalformedDocument("unexpected schema, want '" + std::string(kEnergySchema) + "'");
  const int version = int_from_json(doc, "version");
  if (version != kEnergySchemaVersion)
    throw MalformedDocument("unsupported version " + std::to_string(version) + ", want " +
                            std::to_string(kEnergySchemaVersion));

  EnergyDefinition e;
  e.k = int_from_json(doc, "k");
  e.p = int_from_json(doc, "p");
  if (e.k < 2 || e.p < 2) throw MalformedDocument("k and p must be at least 2");
  const json& coeffs = field(doc, "coefficients");
  if (!coeffs.is_object()) throw MalformedDocument("'coefficients' must be an object");
  for (const auto& [name, value] : coeffs.items())
    e.coefficients.emplace_back(name, rational_from_json(value, "coefficient " + name));
  e.cubic_coeff = rational_from_json(field(doc, "cubic_coeff"), "cubic_coeff");
  e.F_k = density_from_json(doc, "F_k");
  e.residual_omega = density_from_json(doc, "residual_omega");
  e.residual_theta = density_from_json(doc, "residual_theta");
  e.exact_derivative = density_from_json(doc, "exact_derivative");

  const auto errors = check_invariants(e);
  if (!errors.empty()) {
    std::string msg = "energy document violates invariants:";
    for (const auto& err : errors) msg += "\n  " + err;
    throw InvariantViolation(msg);
  }
  return e;
}

}  // namespace nlsenergy::energy
