#include "rislink/link_budget.hpp"

#include <cmath>
#include <limits>

#include "rislink/antenna.hpp"
#include "rislink/constants.hpp"
#include "rislink/constellation.hpp"

namespace rislink {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

SnrResult make_result(double linear, LinkKind kind) {
  SnrResult r;
  r.kind = kind;
  if (linear <= 0.0) {
    r.snr_linear = 0.0;
    r.snr_db = kNegInf;
    r.blocked = true;
  } else {
    r.snr_linear = linear;
    r.snr_db = 10.0 * std::log10(linear);
    r.blocked = false;
  }
  return r;
}

SnrResult ris_kernel(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                     const Vec3& user, LinkKind kind, const PhaseConfig* config) {
  params.validate();
  const double b = panel.panel.radiation_exponent;
  const Vec3 p1 = sat - panel.panel.center;
  const double d1 = p1.norm();
  if (d1 <= 0.0) {
    throw GeometryError("degenerate geometry: satellite at the panel centre");
  }
  const double f1 = radiation_profile(elevation_cos_signed(p1, panel.axis), b);
  if (f1 == 0.0) {
    return make_result(0.0, kind);  // satellite behind the (tilted) panel plane
  }

  double amplitude;
  if (config == nullptr) {
    amplitude = coherent_sum(panel, user);
  } else {
    amplitude = std::abs(coherent_amplitude(panel, user, *config, d1, params.lambda));
  }

  const double a = coef(params, element_gain(b));
  const double linear =
      a * a / params.noise_power * f1 / (d1 * d1) * amplitude * amplitude;
  return make_result(linear, kind);
}

}  // namespace

void LinkParams::validate() const {
  if (tx_power <= 0.0 || tx_gain <= 0.0 || rx_gain <= 0.0 || lambda <= 0.0 ||
      noise_power <= 0.0 || element_area <= 0.0) {
    throw ConfigError("link parameters must be positive");
  }
  if (atmospheric_loss <= 0.0 || atmospheric_loss > 1.0) {
    throw ConfigError("atmospheric loss must be a linear factor in (0, 1]");
  }
  if (radiation_exponent < 0.0) {
    throw ConfigError("radiation exponent must be nonnegative");
  }
}

double db(double x) {
  if (x <= 0.0) {
    throw Error("db of a nonpositive value");
  }
  return 10.0 * std::log10(x);
}

double from_db(double x) {
  return std::pow(10.0, x / 10.0);
}

double coef(const LinkParams& params, double g_ris) {
  params.validate();
  return std::sqrt(params.tx_power * params.tx_gain * params.rx_gain * g_ris *
                   params.element_area * params.atmospheric_loss) *
         params.lambda / (4.0 * kPi);
}

SnrResult snr_ris(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                  const Vec3& user) {
  return ris_kernel(params, panel, sat, user, LinkKind::ris, nullptr);
}

SnrResult snr_ris(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                  const Vec3& user, const PhaseConfig& config) {
  return ris_kernel(params, panel, sat, user, LinkKind::ris, &config);
}

SnrResult snr_ris_tilted(const LinkParams& params, const PanelGeometry& panel, const Vec3& sat,
                         const Vec3& user) {
  return ris_kernel(params, panel, sat, user, LinkKind::ris_tilted, nullptr);
}

SnrResult snr_los(const LinkParams& params, const Vec3& sat, const Vec3& user,
                  const CanyonScenario& canyon) {
  params.validate();
  if (los_blocked(user, sat, canyon)) {
    return make_result(0.0, LinkKind::los);
  }
  const double d = (sat - user).norm();
  if (d <= 0.0) {
    throw GeometryError("degenerate geometry: satellite at the user position");
  }
  const double lam_over = params.lambda / (4.0 * kPi);
  const double linear = params.tx_power * params.tx_gain * params.rx_gain /
                        params.noise_power * lam_over * lam_over / (d * d) *
                        params.atmospheric_loss;
  return make_result(linear, LinkKind::los);
}

}  // namespace rislink
