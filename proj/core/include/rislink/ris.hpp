#pragma once

#include <vector>

#include "rislink/antenna.hpp"
#include "rislink/geometry.hpp"

namespace rislink {

// Per-element phase-shifter setting, each value canonically in [0, 2pi),
// ordered like element_grid.
struct PhaseConfig {
  std::vector<double> psi;

  std::size_t size() const { return psi.size(); }
};

// Closed-form setting that aligns every element term of the cascade:
//   psi_n = mod(k (|p_u,n| + |p_1|), 2pi),
// with |p_1| the panel-centre-to-satellite distance.
PhaseConfig optimal_phases(const PanelGeometry& panel, const Vec3& user,
                           double sat_center_distance, double lambda);

// Variant using the exact per-element satellite distances instead of |p_1|;
// for sensitivity studies, off the default path.
PhaseConfig optimal_phases_exact(const PanelGeometry& panel, const Vec3& user, const Vec3& sat,
                                 double lambda);

// Element-wise cascade sum without the fixed coefficient:
//   sum_n sqrt(F_u,n)/|p_u,n| e^{j psi_n} e^{-j k (|p_u,n| + |p_1|)}.
// Propagation phases are reduced with the same modular arithmetic as
// optimal_phases, so the optimal setting cancels them exactly.
Complex coherent_amplitude(const PanelGeometry& panel, const Vec3& user, const PhaseConfig& config,
                           double sat_center_distance, double lambda);

// The coherent maximum sum_n sqrt(F_u,n)/|p_u,n| reached under optimal_phases.
double coherent_sum(const PanelGeometry& panel, const Vec3& user);

// Round each phase to the nearest of 2^bits uniform levels.
PhaseConfig quantize_phases(const PhaseConfig& config, int bits);

}  // namespace rislink
