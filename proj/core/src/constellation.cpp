#include "rislink/constellation.hpp"

#include <algorithm>
#include <cmath>

namespace rislink {

void ConstellationSpec::validate() const {
  if (altitude <= 0.0) {
    throw ConfigError("constellation altitude must be positive");
  }
  if (sats_per_orbit < 1) {
    throw ConfigError("constellation needs at least one satellite per orbit");
  }
  if (earth_radius <= 0.0) {
    throw ConfigError("earth radius must be positive");
  }
}

double coverage_half_angle(int sats_per_orbit) {
  if (sats_per_orbit < 1) {
    throw ConfigError("satellite count must be at least 1");
  }
  return kPi / sats_per_orbit;
}

double blockage_start_elevation(double height, double width) {
  if (height <= 0.0 || width <= 0.0) {
    throw GeometryError("canyon dimensions must be positive");
  }
  return std::atan(height / width);
}

double unblocked_central_angle(double alpha_b, double altitude, double earth_radius) {
  const double ratio = earth_radius / (earth_radius + altitude);
  return std::acos(ratio * std::cos(alpha_b)) - alpha_b;
}

double blockage_ratio(int sats_per_orbit, double beta_b) {
  const double two_beta_max = 2.0 * coverage_half_angle(sats_per_orbit);
  const double t = 1.0 - beta_b / two_beta_max;
  return std::clamp(t, 0.0, 1.0);
}

double q_min_exact(double beta_b) {
  if (beta_b <= 0.0) {
    throw GeometryError("unblocked window must be positive");
  }
  return kTwoPi / beta_b;
}

int q_min(double beta_b) {
  const double exact = q_min_exact(beta_b);
  // Reference tables quote the window at 0.1 degree resolution; reproduce
  // that count here and leave the exact ratio to q_min_exact.
  const double deg_tenths = std::round(rad_to_deg(beta_b) * 10.0);
  if (deg_tenths < 1.0) {
    return static_cast<int>(std::floor(exact + 0.5));
  }
  return static_cast<int>(std::floor(3600.0 / deg_tenths + 0.5));
}

double q_threshold_exact(double altitude, double earth_radius) {
  if (altitude <= 0.0) {
    throw ConfigError("altitude must be positive");
  }
  const double beta = 2.0 * std::acos(earth_radius / (earth_radius + altitude));
  return kTwoPi / beta;
}

int q_threshold(double altitude, double earth_radius) {
  const double q = q_threshold_exact(altitude, earth_radius);
  double n = std::floor(q);
  // At an exact integer the next satellite is already on the horizon when the
  // serving one sets, so both count as visible.
  if (q == n) {
    n -= 1.0;
  }
  return static_cast<int>(std::max(n, 1.0));
}

BlockageReport blockage_report(const ConstellationSpec& spec, const CanyonScenario& canyon) {
  spec.validate();
  canyon.validate();
  BlockageReport r;
  r.alpha_b = blockage_start_elevation(canyon.height, canyon.width);
  r.beta_b = unblocked_central_angle(r.alpha_b, spec.altitude, spec.earth_radius);
  r.beta_max = coverage_half_angle(spec.sats_per_orbit);
  r.t_b = blockage_ratio(spec.sats_per_orbit, r.beta_b);
  r.q_min_exact = q_min_exact(r.beta_b);
  r.q_min = q_min(r.beta_b);
  r.q_th_exact = q_threshold_exact(spec.altitude, spec.earth_radius);
  r.q_th = q_threshold(spec.altitude, spec.earth_radius);
  r.regime = classify_regime(spec, canyon);
  return r;
}

RegimeResult classify_regime(const ConstellationSpec& spec, const CanyonScenario& canyon) {
  spec.validate();
  canyon.validate();
  const double alpha_b = blockage_start_elevation(canyon.height, canyon.width);
  const double beta_b = unblocked_central_angle(alpha_b, spec.altitude, spec.earth_radius);
  const int q_th_count = q_threshold(spec.altitude, spec.earth_radius);
  const int q_min_count = q_min(beta_b);
  const int q = spec.sats_per_orbit;

  RegimeResult out;
  if (q < q_th_count) {
    out.regime = Regime::single_visible;
  } else if (q == q_th_count) {
    out.regime = Regime::single_visible;
    out.boundary = true;
  } else if (q < q_min_count) {
    out.regime = Regime::partial_blockage;
  } else if (q == q_min_count) {
    out.regime = Regime::partial_blockage;
    out.boundary = true;
  } else {
    out.regime = Regime::always_los;
  }
  return out;
}

bool los_blocked(const Vec3& user, const Vec3& sat, const CanyonScenario& canyon) {
  // Walls run along y at x = 0 and x = W; only the x-z projection matters.
  const double dx = sat.x - user.x;
  const double dz = sat.z - user.z;
  for (double wall_x : {0.0, canyon.width}) {
    const double span = wall_x - user.x;
    if (dx == 0.0) {
      continue;  // vertical ray never crosses a wall plane it does not start on
    }
    const double t = span / dx;
    if (t <= 0.0 || t >= 1.0) {
      continue;
    }
    const double z_at_wall = user.z + t * dz;
    if (z_at_wall < canyon.height) {
      return true;
    }
  }
  return false;
}

const std::vector<ConstellationPreset>& constellation_presets() {
  static const std::vector<ConstellationPreset> presets = {
      {"telesat-polar", 1000.0e3, 13, true},
      {"telesat-inclined", 1200.0e3, 12, true},
      {"starlink-1-1", 550.0e3, 22, false},
      {"starlink-1-2", 570.0e3, 20, false},
      {"starlink-1-3", 560.0e3, 58, false},
  };
  return presets;
}

const ConstellationPreset* find_preset(std::string_view name) {
  for (const ConstellationPreset& p : constellation_presets()) {
    if (p.name == name) {
      return &p;
    }
  }
  return nullptr;
}

}  // namespace rislink
