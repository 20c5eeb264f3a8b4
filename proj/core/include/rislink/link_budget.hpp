#pragma once

#include "rislink/geometry.hpp"
#include "rislink/ris.hpp"

namespace rislink {

// Scalar link-budget inputs in SI units and linear factors. Array gains live
// entirely in tx_gain / rx_gain; the antenna counts are bookkeeping.
struct LinkParams {
  double tx_power = 31.622776601683793;      // W            (15 dBW)
  double tx_gain = 288.40315031266056;       // linear       (24.6 dB)
  double rx_gain = 575.4399373371566;        // linear       (27.6 dB)
  double lambda = 0.025978549220103987;      // m            (11.54 GHz)
  double noise_power = 8.91250938133744e-13;    // W         (-120.5 dBW)
  double atmospheric_loss = 0.9961850044025113; // linear    (0.0166 dB)
  double element_area = 0.00016872125489534137; // d_y*d_z, m^2 ((lambda/2)^2)
  int tx_antennas = 288;                   // 12x24 feed, bookkeeping only
  int rx_antennas = 576;                   // 24x24 terminal array, bookkeeping only
  double radiation_exponent = 2.0;         // b

  void validate() const;
};

enum class LinkKind { ris, ris_tilted, los };

struct SnrResult {
  double snr_linear = 0.0;
  double snr_db = 0.0;
  LinkKind kind = LinkKind::ris;
  bool blocked = false;
};

// 10 log10(x); throws on nonpositive input.
double db(double x);
double from_db(double x);

// Amplitude coefficient sqrt(Pt Gt Gr G_RIS dy dz L_atm) * lambda / (4 pi).
double coef(const LinkParams& params, double g_ris);

// Reflected-link SNR with the panel optimally configured:
//   coef^2/sigma^2 * F_1(theta_1)/|p_1|^2 * (sum_n sqrt(F_u,n)/|p_u,n|)^2.
// Blocked (zero SNR, -inf dB) when the satellite or the user fall behind the
// panel plane.
SnrResult snr_ris(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                  const Vec3& user);

// Same link under an arbitrary phase configuration.
SnrResult snr_ris(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                  const Vec3& user, const PhaseConfig& config);

// Down-tilted panel variant; the satellite-side elevation grows by the tilt
// angle while |p_1| is unchanged. Identical to snr_ris at zero tilt.
SnrResult snr_ris_tilted(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                         const Vec3& user);

// Direct-link SNR Pt Gt Gr / sigma^2 (lambda/4pi)^2 / |p_SAT,u|^2, blocked when
// the ray to the satellite clips a canyon wall.
SnrResult snr_los(const LinkParams& params, const Vec3& sat, const Vec3& user,
                  const CanyonScenario& canyon);

}  // namespace rislink
