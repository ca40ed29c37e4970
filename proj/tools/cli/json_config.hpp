#pragma once

#include <CLI11.hpp>

namespace nlsenergy::cli {

/// CLI11 config reader for JSON documents. Objects become sections (and
/// activate the subcommand of the same name), scalars become option values.
/// Run metadata sidecars are valid inputs: their subcommand section holds
/// the flags of the run.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace nlsenergy::cli
