#include "rislink/antenna.hpp"

#include <cmath>

#include "rislink/constants.hpp"

namespace rislink {

namespace {

// Adaptive Simpson on f over [a, b].
template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

Complex unit_phasor(double phase) {
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace

double radiation_profile(double cos_theta, double b) {
  if (cos_theta <= 0.0) {
    return 0.0;
  }
  if (cos_theta >= 1.0) {
    return 1.0;
  }
  if (b == 0.0) {
    return 1.0;
  }
  if (b == 2.0) {
    return cos_theta * cos_theta;
  }
  return std::pow(cos_theta, b);
}

double element_gain(double b) {
  if (b < 0.0) {
    throw GeometryError("radiation exponent must be nonnegative");
  }
  return 2.0 * (b + 1.0);
}

double element_gain_quadrature(double b, double tol) {
  if (b < 0.0) {
    throw GeometryError("radiation exponent must be nonnegative");
  }
  // 4pi / (2pi * int_0^{pi/2} cos^b(t) sin(t) dt); the profile vanishes on the
  // back hemisphere, so the integral stops at pi/2.
  const auto integrand = [b](double t) { return std::pow(std::cos(t), b) * std::sin(t); };
  const double integral = adaptive_simpson(integrand, 0.0, kPi / 2.0, tol);
  return 2.0 / integral;
}

SteeringVector nearfield_steering(const std::vector<Vec3>& elements, const Vec3& target, double k) {
  SteeringVector out;
  out.reserve(elements.size());
  for (const Vec3& p : elements) {
    const double d = (target - p).norm();
    if (d <= 0.0) {
      throw GeometryError("degenerate geometry: target coincides with an element");
    }
    out.push_back(unit_phasor(-k * d));
  }
  return out;
}

SteeringVector farfield_steering(const std::vector<Vec3>& offsets, const Vec3& direction, double k) {
  SteeringVector out;
  out.reserve(offsets.size());
  for (const Vec3& r : offsets) {
    out.push_back(unit_phasor(-k * r.dot(direction)));
  }
  return out;
}

std::vector<Vec3> ula_offsets(int count, double spacing) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back({0.0, (i - 0.5 * (count - 1)) * spacing, 0.0});
  }
  return out;
}

AttenuationDiag attenuation(const std::vector<Vec3>& elements, const Vec3& target,
                            const Vec3& boresight, double b) {
  AttenuationDiag out;
  out.reserve(elements.size());
  for (const Vec3& p : elements) {
    const Vec3 v = target - p;
    const double d = v.norm();
    if (d <= 0.0) {
      throw GeometryError("degenerate geometry: target coincides with an element");
    }
    const double f = radiation_profile(v.dot(boresight) / d, b);
    out.push_back(std::sqrt(f) / d);
  }
  return out;
}

ChannelPair assemble_channels(const PanelGeometry& panel, const Vec3& sat, const Vec3& user,
                              const UlaSpec& sat_array, const UlaSpec& user_array, double k,
                              const CascadeOptions& opt) {
  const std::size_t n = panel.size();
  const std::size_t mt = static_cast<std::size_t>(sat_array.count);
  const std::size_t mr = static_cast<std::size_t>(user_array.count);
  if (n * std::max(mt, mr) > opt.guard) {
    throw ConfigError("assemble_channels: instance exceeds the oracle-scale guard");
  }

  const std::vector<Vec3> elements = panel.elements();
  const double b = panel.panel.radiation_exponent;
  const Vec3 ris_center = panel.panel.center;

  ChannelPair ch;
  ch.user_array = farfield_steering(ula_offsets(user_array.count, user_array.spacing),
                                    (ris_center - user).normalized(), k);
  ch.sat_array = farfield_steering(ula_offsets(sat_array.count, sat_array.spacing),
                                   (ris_center - sat).normalized(), k);

  // User side: H = c(p_u) a^T(p_u,RIS) A_u,RIS.
  const SteeringVector a_user = nearfield_steering(elements, user, k);
  const AttenuationDiag att_user = attenuation(elements, user, panel.axis, b);
  ch.H = ChannelMatrix(mr, n);
  for (std::size_t r = 0; r < mr; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      ch.H.at(r, c) = ch.user_array[r] * a_user[c] * att_user[c];
    }
  }

  // Satellite side: G = A_SAT,RIS a(p_SAT,RIS) b^H(p_SAT).
  SteeringVector a_sat;
  AttenuationDiag att_sat;
  if (opt.farfield_sat) {
    const Vec3 p1 = sat - ris_center;
    const double d1 = p1.norm();
    const double f1 = radiation_profile(elevation_cos_signed(p1, panel.axis), b);
    a_sat.assign(n, unit_phasor(-k * d1));
    att_sat.assign(n, std::sqrt(f1) / d1);
  } else {
    a_sat = nearfield_steering(elements, sat, k);
    att_sat = attenuation(elements, sat, panel.axis, b);
  }
  ch.G = ChannelMatrix(n, mt);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < mt; ++c) {
      ch.G.at(r, c) = att_sat[r] * a_sat[r] * std::conj(ch.sat_array[c]);
    }
  }
  return ch;
}

Complex cascade_response(const ChannelPair& ch, const std::vector<double>& psi) {
  const std::size_t n = ch.H.cols;
  if (psi.size() != n || ch.G.rows != n) {
    throw ConfigError("cascade_response: phase configuration length mismatch");
  }

  double norm_c = 0.0;
  for (const Complex& c : ch.user_array) norm_c += std::norm(c);
  double norm_b = 0.0;
  for (const Complex& c : ch.sat_array) norm_b += std::norm(c);

  // row = w^H H with w = c / |c|^2.
  std::vector<Complex> row(n);
  for (std::size_t c = 0; c < n; ++c) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < ch.H.rows; ++r) {
      acc += std::conj(ch.user_array[r]) * ch.H.at(r, c);
    }
    row[c] = acc / norm_c;
  }
  // col = G f with f = b / |b|^2.
  std::vector<Complex> col(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < ch.G.cols; ++c) {
      acc += ch.G.at(r, c) * ch.sat_array[c];
    }
    col[r] = acc / norm_b;
  }

  Complex total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += row[i] * unit_phasor(psi[i]) * col[i];
  }
  return total;
}

}  // namespace rislink
