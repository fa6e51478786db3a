#pragma once

#include <optional>
#include <string>
#include <vector>

#include "borel/fuzz.hpp"
#include "borel/json_io.hpp"

namespace borel {

struct PropertyResult {
  std::string name;
  long long passes = 0;
  long long fails = 0;
  std::optional<Json> first_counterexample;
  std::string note;
};

struct PropertiesReport {
  std::vector<PropertyResult> results;
  bool all_pass = true;
  long long samples = 0;
  long long discarded = 0;
  std::string note;
};

// Runs every library invariant over deterministic fuzzed corpora derived
// from cfg.seed. `negative_control` corrupts the decomposition inside the
// route-equality check for the first sample; the run is then expected to
// fail, which exercises the failure path end to end.
PropertiesReport run_properties(const FuzzConfig& cfg, bool negative_control = false);

Json properties_to_json(const PropertiesReport& report);

}  // namespace borel
