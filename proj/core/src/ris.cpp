#include "rislink/ris.hpp"

#include <cmath>

#include "rislink/constants.hpp"

namespace rislink {

namespace {

double wrap_two_pi(double phase) {
  double p = std::fmod(phase, kTwoPi);
  if (p < 0.0) {
    p += kTwoPi;
  }
  return p;
}

double element_distance(const PanelGeometry& panel, std::size_t n, const Vec3& target) {
  const double dx = target.x - panel.ex[n];
  const double dy = target.y - panel.ey[n];
  const double dz = target.z - panel.ez[n];
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (d <= 0.0) {
    throw GeometryError("degenerate geometry: target coincides with an element");
  }
  return d;
}

}  // namespace

PhaseConfig optimal_phases(const PanelGeometry& panel, const Vec3& user,
                           double sat_center_distance, double lambda) {
  if (lambda <= 0.0) {
    throw GeometryError("wavelength must be positive");
  }
  const double k = wave_number(lambda);
  PhaseConfig config;
  config.psi.resize(panel.size());
  for (std::size_t n = 0; n < panel.size(); ++n) {
    config.psi[n] = wrap_two_pi(k * (element_distance(panel, n, user) + sat_center_distance));
  }
  return config;
}

PhaseConfig optimal_phases_exact(const PanelGeometry& panel, const Vec3& user, const Vec3& sat,
                                 double lambda) {
  if (lambda <= 0.0) {
    throw GeometryError("wavelength must be positive");
  }
  const double k = wave_number(lambda);
  PhaseConfig config;
  config.psi.resize(panel.size());
  for (std::size_t n = 0; n < panel.size(); ++n) {
    config.psi[n] = wrap_two_pi(
        k * (element_distance(panel, n, user) + element_distance(panel, n, sat)));
  }
  return config;
}

Complex coherent_amplitude(const PanelGeometry& panel, const Vec3& user, const PhaseConfig& config,
                           double sat_center_distance, double lambda) {
  if (config.size() != panel.size()) {
    throw ConfigError("phase configuration length does not match the element count");
  }
  const double k = wave_number(lambda);
  const double b = panel.panel.radiation_exponent;
  Complex amp = 0.0;
  for (std::size_t n = 0; n < panel.size(); ++n) {
    const double dx = user.x - panel.ex[n];
    const double dy = user.y - panel.ey[n];
    const double dz = user.z - panel.ez[n];
    const double d2 = dx * dx + dy * dy + dz * dz;
    const double d = std::sqrt(d2);
    if (d <= 0.0) {
      throw GeometryError("degenerate geometry: user coincides with an element");
    }
    const double front = dx * panel.axis.x + dy * panel.axis.y + dz * panel.axis.z;
    const double r = std::sqrt(radiation_profile(front / d, b)) / d;
    if (r == 0.0) {
      continue;
    }
    // Same modular reduction as optimal_phases; the optimal setting yields a
    // phase of exactly zero instead of the difference of two huge angles.
    const double prop = wrap_two_pi(k * (d + sat_center_distance));
    const double phase = config.psi[n] - prop;
    amp += Complex{r * std::cos(phase), r * std::sin(phase)};
  }
  return amp;
}

double coherent_sum(const PanelGeometry& panel, const Vec3& user) {
  const double b = panel.panel.radiation_exponent;
  const bool cosine_square = (b == 2.0);
  double sum = 0.0;
  for (std::size_t n = 0; n < panel.size(); ++n) {
    const double dx = user.x - panel.ex[n];
    const double dy = user.y - panel.ey[n];
    const double dz = user.z - panel.ez[n];
    const double d2 = dx * dx + dy * dy + dz * dz;
    const double front = dx * panel.axis.x + dy * panel.axis.y + dz * panel.axis.z;
    if (front <= 0.0 || d2 <= 0.0) {
      continue;
    }
    if (cosine_square) {
      // sqrt(cos^2)/d = cos/d = front/d^2; the default profile needs no pow.
      sum += front / d2;
    } else {
      const double d = std::sqrt(d2);
      sum += std::sqrt(radiation_profile(front / d, b)) / d;
    }
  }
  return sum;
}

PhaseConfig quantize_phases(const PhaseConfig& config, int bits) {
  if (bits < 1) {
    throw ConfigError("phase quantization needs at least one bit");
  }
  const double levels = static_cast<double>(std::size_t{1} << bits);
  const double step = kTwoPi / levels;
  PhaseConfig out;
  out.psi.reserve(config.size());
  for (double p : config.psi) {
    out.psi.push_back(wrap_two_pi(std::round(p / step) * step));
  }
  return out;
}

}  // namespace rislink
