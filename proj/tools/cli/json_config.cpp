#include "cli/json_config.hpp"

#include <nlohmann/json.hpp>

namespace nlsenergy::cli {
namespace {

using json = nlohmann::json;

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const json& j, std::vector<std::string>& parents, std::vector<CLI::ConfigItem>& out) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      parents.push_back(key);
      out.push_back({parents, "++", {}});
      flatten(value, parents, out);
      out.push_back({parents, "--", {}});
      parents.pop_back();
    } else if (value.is_array()) {
      CLI::ConfigItem item{parents, key, {}};
      for (const auto& v : value) item.inputs.push_back(scalar_text(v));
      out.push_back(std::move(item));
    } else if (!value.is_null()) {
      out.push_back({parents, key, {scalar_text(value)}});
    }
  }
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
  json j = json::object();
  for (const CLI::Option* opt : app->get_options({})) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    const std::string name = opt->get_lnames().front();
    if (opt->count() > 0)
      j[name] = opt->results().size() == 1 ? json(opt->results().front()) : json(opt->results());
    else if (default_also && !opt->get_default_str().empty())
      j[name] = opt->get_default_str();
  }
  return j.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json j;
  try {
    j = json::parse(input);
  } catch (const json::parse_error& ex) {
    throw CLI::ConversionError(std::string("config is not valid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw CLI::ConversionError("config document must be a JSON object");
  std::vector<CLI::ConfigItem> items;
  std::vector<std::string> parents;
  flatten(j, parents, items);
  return items;
}

}  // namespace nlsenergy::cli
