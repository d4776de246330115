#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace fbt {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentResult {
  nlohmann::json report;
  // Sampled functions as CSV; empty when the experiment samples none.
  std::string csv;
  bool passed = false;
};

const char* library_version();
std::vector<std::string> experiment_names();
nlohmann::json default_config(const std::string& command);
// Overlays the given keys on the defaults and checks their types and ranges.
nlohmann::json resolve_config(const std::string& command, const nlohmann::json& overrides);
ExperimentResult run_experiment(const std::string& command, const nlohmann::json& overrides);

}  // namespace fbt
