#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rislink/errors.hpp"

namespace rislink {

// Local Cartesian frame: x across the street, y along the street, z up.
// Origin at the foot of the RIS building; the panel centre sits at (0, 0, H).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const;
};

// Rectangular phase-shifter panel. Vertical (tilt 0) panels face +x; the tilt
// rotates the top edge outward over the street about the horizontal centre line.
struct RisPanel {
  double length_y = 5.0;             // m
  double length_z = 3.0;             // m
  double spacing = 0.0129892746;     // element pitch, m (half wavelength at 11.54 GHz)
  Vec3 center{0.0, 0.0, 100.0};
  double tilt = 0.0;                 // radians in [0, pi/2)
  double radiation_exponent = 2.0;   // b in the cos^b element profile

  int count_y() const;               // N_y = floor(length_y / spacing), >= 1
  int count_z() const;               // N_z
  std::size_t count() const;         // N = N_y * N_z
  double aperture() const;           // panel diagonal, used as D in the Fraunhofer check
  void validate() const;
};

struct CanyonScenario {
  double height = 100.0;         // H, building height, m
  double width = 50.0;           // W, street width, m
  double region_length = 100.0;  // L, extent of the study region along y, m

  double aspect_ratio() const { return height / width; }
  void validate() const;
};

// Tilt of a panel-local offset (0, y, z) about the horizontal line through the
// panel centre at height `center_height`:
//   (z sin(tilt), y, z cos(tilt) + center_height).
Vec3 tilt_transform(const Vec3& local, double tilt, double center_height);

// Boresight of a tilted panel. A down tilt rotates the outward normal from +x
// toward the street floor: (cos(tilt), 0, -sin(tilt)).
Vec3 tilted_boresight(double tilt);

// Element centres on the regular lattice, row-major with y fastest, bottom row
// first. Ordering is deterministic so phase vectors are reproducible.
std::vector<Vec3> element_grid(const RisPanel& panel);

// |cos| of the angle between p and a unit axis. Throws on |p| == 0.
double elevation_cos(const Vec3& p, const Vec3& axis);

// Signed variant: negative when the target is behind the plane normal to
// `axis`. Feeds the zero branch of the radiation profile.
double elevation_cos_signed(const Vec3& p, const Vec3& axis);

// Near/far-field boundary 2 D^2 / lambda of an aperture of diagonal D.
double fraunhofer_distance(double aperture, double lambda);

// Line-of-sight distance to a satellite at `elevation` above the local
// horizon, on a circular orbit of altitude `altitude` over a spherical Earth:
//   sqrt((R+h)^2 - R^2 cos^2(a)) - R sin(a).
double slant_range(double elevation, double altitude, double earth_radius);

// Satellite placed in the x-z plane on the +x side at the given elevation,
// relative to `origin`. Throws below the horizon (elevation <= 0).
Vec3 sat_position(double elevation, double altitude, double earth_radius, const Vec3& origin);

// Materialized panel: element coordinates in structure-of-arrays layout plus
// the boresight axis. Built once and shared read-only across workers.
struct PanelGeometry {
  RisPanel panel;
  std::vector<double> ex, ey, ez;
  Vec3 axis;

  std::size_t size() const { return ex.size(); }
  Vec3 element(std::size_t n) const { return {ex[n], ey[n], ez[n]}; }
  std::vector<Vec3> elements() const;
};

PanelGeometry materialize(const RisPanel& panel);

}  // namespace rislink
