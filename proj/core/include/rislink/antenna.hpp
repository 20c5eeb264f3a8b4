#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rislink/geometry.hpp"

namespace rislink {

using Complex = std::complex<double>;

// Unit-modulus phase entries, ordered like element_grid.
using SteeringVector = std::vector<Complex>;

// sqrt(F_n) / distance_n per element, 1/m; zero when the target sits at or
// behind the panel plane.
using AttenuationDiag = std::vector<double>;

// Element power profile cos^b(theta) over the front hemisphere, zero behind.
// Takes the signed cosine so the back side maps to the zero branch.
double radiation_profile(double cos_theta, double b);

// Per-element gain for the cos^b profile, closed form 2(b+1).
double element_gain(double b);

// Numeric-quadrature route for the same gain integral; the independent half
// of the dual-route check on element_gain.
double element_gain_quadrature(double b, double tol = 1e-12);

// Spherical-wave steering: entry_n = exp(-j k |target - p_n|).
SteeringVector nearfield_steering(const std::vector<Vec3>& elements, const Vec3& target, double k);

// Plane-wave steering for a small array: entry_m = exp(-j k <r_m, direction>).
SteeringVector farfield_steering(const std::vector<Vec3>& offsets, const Vec3& direction, double k);

// Centered line array along y with `count` elements at `spacing`; the far-field
// arrays at the satellite and the user terminal.
std::vector<Vec3> ula_offsets(int count, double spacing);

AttenuationDiag attenuation(const std::vector<Vec3>& elements, const Vec3& target,
                            const Vec3& boresight, double b);

// Dense complex matrix, row-major. Oracle-scale only.
struct ChannelMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> m;

  ChannelMatrix() = default;
  ChannelMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), m(r * c) {}
  Complex& at(std::size_t r, std::size_t c) { return m[r * cols + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return m[r * cols + c]; }
};

struct CascadeOptions {
  // Replace the per-element satellite-side profile, distance and phase by the
  // panel-centre values (the satellite sits far beyond the Fraunhofer range).
  bool farfield_sat = true;
  // Refuse N * max(Mt, Mr) beyond this; the explicit matrices exist for
  // cross-checking, not production sweeps.
  std::size_t guard = std::size_t{1} << 22;
};

// Explicit channel factors: H (user side, Mr x N), G (satellite side, N x Mt),
// both rank one by construction, plus the steering vectors that define the
// matched beamformers.
struct ChannelPair {
  ChannelMatrix H;             // c(p_u) a^T(p_u,RIS) A_u,RIS
  ChannelMatrix G;             // A_SAT,RIS a(p_SAT,RIS) b^H(p_SAT)
  SteeringVector user_array;   // c(p_u)
  SteeringVector sat_array;    // b(p_SAT)
};

struct UlaSpec {
  int count = 1;
  double spacing = 0.0;  // m
};

ChannelPair assemble_channels(const PanelGeometry& panel, const Vec3& sat, const Vec3& user,
                              const UlaSpec& sat_array, const UlaSpec& user_array, double k,
                              const CascadeOptions& opt = {});

// w^H H diag(e^{j psi}) G f with matched beamformers normalized to unit
// response (w^H c = 1, b^H f = 1), so every array gain stays in Gt/Gr.
Complex cascade_response(const ChannelPair& ch, const std::vector<double>& psi);

}  // namespace rislink
