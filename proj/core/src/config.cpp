#include "rislink/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rislink/csv.hpp"

namespace rislink {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config: " + path + ": " + what);
}

void reject_unknown(const json& node, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : node.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError("config: unknown key: " + (path.empty() ? key : path + "." + key));
    }
  }
}

double require_number(const json& node, const std::string& path) {
  if (!node.is_number()) {
    fail(path, "expected a number");
  }
  const double v = node.get<double>();
  if (!std::isfinite(v)) {
    fail(path, "must be finite");
  }
  return v;
}

double positive(const json& node, const std::string& path) {
  const double v = require_number(node, path);
  if (v <= 0.0) {
    fail(path, "must be positive");
  }
  return v;
}

int positive_int(const json& node, const std::string& path) {
  if (!node.is_number_integer()) {
    fail(path, "expected an integer");
  }
  const long long v = node.get<long long>();
  if (v < 1) {
    fail(path, "must be at least 1");
  }
  return static_cast<int>(v);
}

void parse_canyon(const json& node, RunConfig& cfg) {
  reject_unknown(node, "canyon", {"height_m", "width_m", "region_length_m"});
  if (node.contains("height_m")) cfg.canyon.height = positive(node["height_m"], "canyon.height_m");
  if (node.contains("width_m")) cfg.canyon.width = positive(node["width_m"], "canyon.width_m");
  if (node.contains("region_length_m"))
    cfg.canyon.region_length = positive(node["region_length_m"], "canyon.region_length_m");
}

void parse_panel(const json& node, RunConfig& cfg, bool& spacing_set) {
  reject_unknown(node, "panel",
                 {"length_y_m", "length_z_m", "spacing_m", "tilt_deg", "radiation_exponent"});
  if (node.contains("length_y_m"))
    cfg.panel.length_y = positive(node["length_y_m"], "panel.length_y_m");
  if (node.contains("length_z_m"))
    cfg.panel.length_z = positive(node["length_z_m"], "panel.length_z_m");
  if (node.contains("spacing_m") && !node["spacing_m"].is_null()) {
    cfg.panel.spacing = positive(node["spacing_m"], "panel.spacing_m");
    spacing_set = true;
  }
  if (node.contains("tilt_deg")) {
    const double t = require_number(node["tilt_deg"], "panel.tilt_deg");
    if (t < 0.0 || t >= 90.0) {
      fail("panel.tilt_deg", "must lie in [0, 90)");
    }
    cfg.panel.tilt = deg_to_rad(t);
  }
  if (node.contains("radiation_exponent")) {
    const double b = require_number(node["radiation_exponent"], "panel.radiation_exponent");
    if (b < 0.0) {
      fail("panel.radiation_exponent", "must be nonnegative");
    }
    cfg.panel.radiation_exponent = b;
    cfg.link.radiation_exponent = b;
  }
}

void parse_link(const json& node, RunConfig& cfg, bool& element_area_set) {
  reject_unknown(node, "link",
                 {"tx_power_dbw", "rx_gain_db", "tx_gain_db", "noise_power_dbw",
                  "atmospheric_loss_db", "element_area_m2", "tx_antennas", "rx_antennas"});
  if (node.contains("tx_power_dbw"))
    cfg.link.tx_power = from_db(require_number(node["tx_power_dbw"], "link.tx_power_dbw"));
  if (node.contains("tx_gain_db"))
    cfg.link.tx_gain = from_db(require_number(node["tx_gain_db"], "link.tx_gain_db"));
  if (node.contains("rx_gain_db"))
    cfg.link.rx_gain = from_db(require_number(node["rx_gain_db"], "link.rx_gain_db"));
  if (node.contains("noise_power_dbw"))
    cfg.link.noise_power =
        from_db(require_number(node["noise_power_dbw"], "link.noise_power_dbw"));
  if (node.contains("atmospheric_loss_db")) {
    const double loss = require_number(node["atmospheric_loss_db"], "link.atmospheric_loss_db");
    if (loss < 0.0) {
      fail("link.atmospheric_loss_db", "must be nonnegative");
    }
    cfg.link.atmospheric_loss = from_db(-loss);
  }
  if (node.contains("element_area_m2") && !node["element_area_m2"].is_null()) {
    cfg.link.element_area = positive(node["element_area_m2"], "link.element_area_m2");
    element_area_set = true;
  }
  if (node.contains("tx_antennas"))
    cfg.link.tx_antennas = positive_int(node["tx_antennas"], "link.tx_antennas");
  if (node.contains("rx_antennas"))
    cfg.link.rx_antennas = positive_int(node["rx_antennas"], "link.rx_antennas");
}

void parse_constellation(const json& node, RunConfig& cfg) {
  reject_unknown(node, "constellation",
                 {"preset", "altitude_km", "sats_per_orbit", "earth_radius_km"});
  if (node.contains("preset")) {
    if (!node["preset"].is_string()) {
      fail("constellation.preset", "expected a string");
    }
    cfg.preset = node["preset"].get<std::string>();
  }
  if (node.contains("altitude_km"))
    cfg.constellation.altitude = 1e3 * positive(node["altitude_km"], "constellation.altitude_km");
  if (node.contains("sats_per_orbit"))
    cfg.constellation.sats_per_orbit =
        positive_int(node["sats_per_orbit"], "constellation.sats_per_orbit");
  if (node.contains("earth_radius_km"))
    cfg.constellation.earth_radius =
        1e3 * positive(node["earth_radius_km"], "constellation.earth_radius_km");
}

void parse_sweep(const json& node, RunConfig& cfg) {
  reject_unknown(node, "sweep",
                 {"grid_spacing_m", "grid_x_m", "grid_y_m", "elevations_deg", "tilt_min_deg",
                  "tilt_max_deg", "tilt_step_deg", "users_m"});
  if (node.contains("grid_spacing_m"))
    cfg.grid.spacing = positive(node["grid_spacing_m"], "sweep.grid_spacing_m");
  const auto parse_range = [](const json& v, const std::string& path, double& lo, double& hi) {
    if (!v.is_array() || v.size() != 2) {
      fail(path, "expected [min, max]");
    }
    lo = require_number(v[0], path + "[0]");
    hi = require_number(v[1], path + "[1]");
    if (hi <= lo) {
      fail(path, "max must exceed min");
    }
  };
  if (node.contains("grid_x_m"))
    parse_range(node["grid_x_m"], "sweep.grid_x_m", cfg.grid.x_min, cfg.grid.x_max);
  if (node.contains("grid_y_m"))
    parse_range(node["grid_y_m"], "sweep.grid_y_m", cfg.grid.y_min, cfg.grid.y_max);
  if (node.contains("elevations_deg")) {
    const json& v = node["elevations_deg"];
    if (!v.is_array() || v.empty()) {
      fail("sweep.elevations_deg", "expected a non-empty array");
    }
    cfg.elevations.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double deg =
          require_number(v[i], "sweep.elevations_deg[" + std::to_string(i) + "]");
      if (deg <= 0.0 || deg > 90.0) {
        fail("sweep.elevations_deg[" + std::to_string(i) + "]", "must lie in (0, 90]");
      }
      cfg.elevations.push_back(deg_to_rad(deg));
    }
  }
  if (node.contains("tilt_min_deg"))
    cfg.tilt_min = deg_to_rad(require_number(node["tilt_min_deg"], "sweep.tilt_min_deg"));
  if (node.contains("tilt_max_deg"))
    cfg.tilt_max = deg_to_rad(require_number(node["tilt_max_deg"], "sweep.tilt_max_deg"));
  if (node.contains("tilt_step_deg"))
    cfg.tilt_step = deg_to_rad(positive(node["tilt_step_deg"], "sweep.tilt_step_deg"));
  if (node.contains("users_m")) {
    const json& v = node["users_m"];
    if (!v.is_array() || v.empty()) {
      fail("sweep.users_m", "expected a non-empty array of [x, y] pairs");
    }
    cfg.users.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = "sweep.users_m[" + std::to_string(i) + "]";
      if (!v[i].is_array() || v[i].size() != 2) {
        fail(path, "expected [x, y]");
      }
      cfg.users.push_back(
          {require_number(v[i][0], path + "[0]"), require_number(v[i][1], path + "[1]"), 0.0});
    }
  }
}

void resolve_preset(RunConfig& cfg) {
  if (cfg.preset == "custom" || cfg.preset == "all") {
    return;  // "all" expands inside the blockage table only
  }
  const ConstellationPreset* p = find_preset(cfg.preset);
  if (p == nullptr) {
    fail("constellation.preset", "unknown preset '" + cfg.preset + "'");
  }
  cfg.constellation.altitude = p->altitude;
  cfg.constellation.sats_per_orbit = p->sats_per_orbit;
}

void finalize(RunConfig& cfg, bool spacing_set, bool element_area_set) {
  cfg.link.lambda = wavelength(cfg.frequency_hz);
  if (!spacing_set) {
    cfg.panel.spacing = 0.5 * cfg.link.lambda;
  }
  if (!element_area_set) {
    cfg.link.element_area = 0.25 * cfg.link.lambda * cfg.link.lambda;
  }
  resolve_preset(cfg);
  if (cfg.tilt_max < cfg.tilt_min) {
    fail("sweep.tilt_max_deg", "must not be below sweep.tilt_min_deg");
  }
  cfg.panel.validate();
  cfg.canyon.validate();
  cfg.link.validate();
  cfg.constellation.validate();
  cfg.grid.validate();
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.panel.center = {0.0, 0.0, cfg.canyon.height};
  return cfg;
}

RunConfig parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  reject_unknown(root, "",
                 {"frequency_ghz", "canyon", "panel", "link", "constellation", "sweep", "workers",
                  "seed"});

  RunConfig cfg = default_config();
  bool spacing_set = false;
  bool element_area_set = false;

  if (root.contains("frequency_ghz"))
    cfg.frequency_hz = 1e9 * positive(root["frequency_ghz"], "frequency_ghz");
  if (root.contains("canyon")) parse_canyon(root["canyon"], cfg);
  if (root.contains("panel")) parse_panel(root["panel"], cfg, spacing_set);
  if (root.contains("link")) parse_link(root["link"], cfg, element_area_set);
  if (root.contains("constellation")) parse_constellation(root["constellation"], cfg);
  if (root.contains("sweep")) parse_sweep(root["sweep"], cfg);
  if (root.contains("workers")) cfg.workers = positive_int(root["workers"], "workers");
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) {
      throw ConfigError("config: seed: expected an integer");
    }
    cfg.seed = root["seed"].get<unsigned long>();
  }

  cfg.panel.center = {0.0, 0.0, cfg.canyon.height};
  finalize(cfg, spacing_set, element_area_set);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) {
    throw IoError("cannot read config file: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig apply_overrides(RunConfig config, const CliOverrides& overrides) {
  if (overrides.workers) {
    if (*overrides.workers < 1) {
      throw ConfigError("config: workers: must be at least 1");
    }
    config.workers = *overrides.workers;
  }
  if (overrides.elevations_deg) {
    config.elevations.clear();
    for (double deg : *overrides.elevations_deg) {
      if (deg <= 0.0 || deg > 90.0) {
        throw ConfigError("config: elevations: must lie in (0, 90]");
      }
      config.elevations.push_back(deg_to_rad(deg));
    }
    if (config.elevations.empty()) {
      throw ConfigError("config: elevations: must not be empty");
    }
  }
  if (overrides.preset) {
    config.preset = *overrides.preset;
    if (config.preset != "custom" && config.preset != "all") {
      const ConstellationPreset* p = find_preset(config.preset);
      if (p == nullptr) {
        throw ConfigError("config: constellation.preset: unknown preset '" + config.preset + "'");
      }
      config.constellation.altitude = p->altitude;
      config.constellation.sats_per_orbit = p->sats_per_orbit;
    }
  }
  return config;
}

std::string RunConfig::resolved_json() const {
  json j;
  j["frequency_ghz"] = frequency_hz / 1e9;
  j["lambda_m"] = link.lambda;
  j["canyon"] = {{"height_m", canyon.height},
                 {"width_m", canyon.width},
                 {"region_length_m", canyon.region_length}};
  j["panel"] = {{"length_y_m", panel.length_y},
                {"length_z_m", panel.length_z},
                {"spacing_m", panel.spacing},
                {"tilt_deg", rad_to_deg(panel.tilt)},
                {"radiation_exponent", panel.radiation_exponent},
                {"count_y", panel.count_y()},
                {"count_z", panel.count_z()}};
  j["link"] = {{"tx_power_dbw", db(link.tx_power)},
               {"tx_gain_db", db(link.tx_gain)},
               {"rx_gain_db", db(link.rx_gain)},
               {"noise_power_dbw", db(link.noise_power)},
               {"atmospheric_loss_db", -db(link.atmospheric_loss)},
               {"element_area_m2", link.element_area},
               {"tx_antennas", link.tx_antennas},
               {"rx_antennas", link.rx_antennas}};
  j["constellation"] = {{"preset", preset},
                        {"altitude_km", constellation.altitude / 1e3},
                        {"sats_per_orbit", constellation.sats_per_orbit},
                        {"earth_radius_km", constellation.earth_radius / 1e3}};
  json users_json = json::array();
  for (const Vec3& u : users) {
    users_json.push_back({u.x, u.y});
  }
  json elev_json = json::array();
  for (double e : elevations) {
    elev_json.push_back(rad_to_deg(e));
  }
  j["sweep"] = {{"grid_spacing_m", grid.spacing},
                {"grid_x_m", {grid.x_min, grid.x_max}},
                {"grid_y_m", {grid.y_min, grid.y_max}},
                {"elevations_deg", elev_json},
                {"tilt_min_deg", rad_to_deg(tilt_min)},
                {"tilt_max_deg", rad_to_deg(tilt_max)},
                {"tilt_step_deg", rad_to_deg(tilt_step)},
                {"users_m", users_json}};
  j["workers"] = workers;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

}  // namespace rislink
