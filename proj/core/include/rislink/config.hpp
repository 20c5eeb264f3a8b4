#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rislink/constellation.hpp"
#include "rislink/link_budget.hpp"
#include "rislink/scenario.hpp"

namespace rislink {

// Command-line overrides applied on top of the config file.
struct CliOverrides {
  std::optional<int> workers;
  std::optional<std::vector<double>> elevations_deg;
  std::optional<std::string> preset;
};

// Parsed and validated run configuration in working units. Unknown keys are
// rejected with the exact offending key path; defaults mirror the reference
// downlink (11.54 GHz, 1300 km, 15 dBW, 24.6/27.6 dB, -120.5 dBW, 0.0166 dB,
// 5 m x 3 m panel, 100 m x 50 m canyon).
struct RunConfig {
  double frequency_hz = 11.54e9;

  CanyonScenario canyon;
  RisPanel panel;             // spacing resolved to lambda/2 unless set
  LinkParams link;            // SI units, linear factors

  std::string preset = "custom";  // constellation preset name or "custom"
  ConstellationSpec constellation;

  GridSpec grid;
  std::vector<double> elevations = {deg_to_rad(30.0), deg_to_rad(45.0), deg_to_rad(60.0)};
  double tilt_min = 0.0;                  // rad
  double tilt_max = deg_to_rad(60.0);     // rad
  double tilt_step = deg_to_rad(1.0);     // rad
  std::vector<Vec3> users = {{5.0, 0.0, 0.0}, {15.0, 0.0, 0.0}, {25.0, 0.0, 0.0}, {45.0, 0.0, 0.0}};

  int workers = 1;
  unsigned long seed = 0;  // reserved; the simulator is deterministic

  double lambda() const { return link.lambda; }

  // Serialized resolved state embedded next to every run's outputs.
  std::string resolved_json() const;
};

RunConfig default_config();

// Strict parse: every key must be known, every quantity physical.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

RunConfig apply_overrides(RunConfig config, const CliOverrides& overrides);

}  // namespace rislink
