#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rislink/constants.hpp"
#include "rislink/geometry.hpp"

namespace rislink {

struct ConstellationSpec {
  double altitude = 1300.0e3;          // m
  int sats_per_orbit = 20;             // Q
  double earth_radius = kEarthRadius;  // m

  void validate() const;
};

// Half-angle of the orbit arc covered by one satellite: beta_max = pi / Q.
double coverage_half_angle(int sats_per_orbit);

// Elevation where canyon blockage starts for a user across the street from
// the obstructing wall: atan(H / W).
double blockage_start_elevation(double height, double width);

// Central angle of the unblocked part of a pass:
//   beta_B = acos(R/(R+h) cos(alpha_B)) - alpha_B.
double unblocked_central_angle(double alpha_b, double altitude, double earth_radius);

// Fraction of a pass with the direct link obstructed:
//   T_B = 1 - beta_B / (2 beta_max), clamped to [0, 1].
double blockage_ratio(int sats_per_orbit, double beta_b);

// Satellites per orbit guaranteeing an always-unblocked direct link: 2pi/beta_B.
double q_min_exact(double beta_b);

// Integer count as published in constellation blockage tables: the window is
// taken at 0.1 degree resolution before inverting, then rounded half-up.
// Report q_min_exact alongside; the two can differ by a few satellites.
int q_min(double beta_b);

// Largest satellite count with at most one satellite above the horizon:
//   beta = 2 acos(R/(R+h)), Q_th = floor(2pi/beta).
double q_threshold_exact(double altitude, double earth_radius);
int q_threshold(double altitude, double earth_radius);

enum class Regime { single_visible, partial_blockage, always_los };

struct RegimeResult {
  Regime regime = Regime::partial_blockage;
  bool boundary = false;  // Q equal to Q_th or Q_min; assigned to the smaller regime
};

struct BlockageReport {
  double alpha_b = 0.0;   // rad
  double beta_b = 0.0;    // rad
  double beta_max = 0.0;  // rad
  double t_b = 0.0;       // ratio in [0, 1]
  double q_min_exact = 0.0;
  int q_min = 0;
  double q_th_exact = 0.0;
  int q_th = 0;
  RegimeResult regime;
};

BlockageReport blockage_report(const ConstellationSpec& spec, const CanyonScenario& canyon);

RegimeResult classify_regime(const ConstellationSpec& spec, const CanyonScenario& canyon);

// True when the user-to-satellite ray intersects either canyon wall, modeled
// as planes of height H at x = 0 and x = W running along y.
bool los_blocked(const Vec3& user, const Vec3& sat, const CanyonScenario& canyon);

struct ConstellationPreset {
  std::string name;
  double altitude = 0.0;  // m
  int sats_per_orbit = 0;
  bool fitted = false;    // parameters fitted to published ratios, provisional

  ConstellationSpec spec() const { return {altitude, sats_per_orbit, kEarthRadius}; }
};

const std::vector<ConstellationPreset>& constellation_presets();
const ConstellationPreset* find_preset(std::string_view name);

}  // namespace rislink
