#pragma once

#include <cstdint>
#include <vector>

#include "rislink/constellation.hpp"
#include "rislink/link_budget.hpp"

namespace rislink {

struct GridSpec {
  double spacing = 1.0;  // m
  double x_min = 0.0;
  double x_max = 50.0;
  double y_min = -50.0;
  double y_max = 50.0;

  int nx() const;
  int ny() const;
  void validate() const;
};

// Ground-level SNR map; cells indexed iy * nx + ix, blocked cells marked
// explicitly instead of carrying a sentinel value.
struct SnrGrid {
  GridSpec grid;
  std::vector<double> snr_db;
  std::vector<std::uint8_t> blocked;
  double sat_elevation = 0.0;  // rad, metadata
  RisPanel panel;              // metadata
  LinkKind kind = LinkKind::ris;

  double cell_x(int ix) const { return grid.x_min + (ix + 0.5) * grid.spacing; }
  double cell_y(int iy) const { return grid.y_min + (iy + 0.5) * grid.spacing; }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * grid.nx() + ix;
  }
};

// Per-cell SNR over the canyon floor. Cells are independent work units split
// across `workers` threads; the per-cell element reduction runs in a fixed
// order, so the result is identical for any worker count.
SnrGrid coverage_map(const LinkParams& params, const PanelGeometry& panel,
                     const CanyonScenario& canyon, const ConstellationSpec& constellation,
                     double sat_elevation, const GridSpec& grid, LinkKind kind, int workers = 1);

struct TiltResult {
  double tilt = 0.0;  // rad
  SnrResult snr;
};

// Grid search of snr_ris_tilted over [tilt_min, tilt_max] with `step`;
// ties break toward the smaller tilt.
TiltResult optimal_tilt(const LinkParams& params, const RisPanel& panel, const Vec3& sat,
                        const Vec3& user, double tilt_min, double tilt_max, double step);

// Facing-each-other deployment: panel_left on the building at x = 0 facing +x
// (illuminated by sat1 on the +x side), panel_right on the building at x = W
// facing -x (illuminated by sat2 on the -x side). Both panels are given in
// the canonical +x-facing frame; the right link is evaluated by mirroring.
struct DoubleRisScenario {
  RisPanel panel_left;
  RisPanel panel_right;
  double sat1_elevation = deg_to_rad(45.0);  // rad
  double sat2_elevation = deg_to_rad(45.0);  // rad
  CanyonScenario canyon;
  ConstellationSpec constellation;

  // Replace the exact panel-centre elevation by the elevation seen from the
  // canyon origin when computing the satellite-side profile.
  bool origin_elevation_approx = false;
};

enum class ServingLink { los1, los2, ris1, ris2, none };

struct DoubleRisResult {
  SnrResult los1, los2, ris1, ris2;
  ServingLink serving = ServingLink::none;
};

// Elevation of the satellite one slot behind the given one, on the opposite
// side of the canyon; negative when it sits below the horizon.
double companion_elevation(double sat1_elevation, const ConstellationSpec& spec);

DoubleRisResult double_ris_evaluate(const DoubleRisScenario& scenario, const LinkParams& params,
                                    const Vec3& user);

struct TrajectorySeries {
  std::vector<double> central_angle;  // signed, rad; +x side positive
  std::vector<double> elevation;      // rad, negative below the horizon
  // best_snr_db[sample][user]; -inf when every link is blocked
  std::vector<std::vector<double>> best_snr_db;
  std::vector<double> blocked_fraction;  // per user, over the swept samples
};

// Sweep of one satellite pass sampled uniformly in central angle (orbit time)
// across the coverage window, both sides of zenith. Panels may be empty
// (direct link only); all panels face +x from the x = 0 building. Samples
// with elevation outside [elevation_min, elevation_max] are skipped.
TrajectorySeries trajectory_sweep(const ConstellationSpec& spec, const CanyonScenario& canyon,
                                  const std::vector<RisPanel>& panels,
                                  const std::vector<Vec3>& users, const LinkParams& params,
                                  double step, double elevation_min = -kPi / 2.0,
                                  double elevation_max = kPi / 2.0);

}  // namespace rislink
