#include "rislink/geometry.hpp"

#include <cmath>

#include "rislink/constants.hpp"

namespace rislink {

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n <= 0.0) {
    throw GeometryError("cannot normalize a zero-length vector");
  }
  return {x / n, y / n, z / n};
}

int RisPanel::count_y() const {
  if (spacing <= 0.0) {
    throw GeometryError("invalid panel: element spacing must be positive");
  }
  return static_cast<int>(std::floor(length_y / spacing));
}

int RisPanel::count_z() const {
  if (spacing <= 0.0) {
    throw GeometryError("invalid panel: element spacing must be positive");
  }
  return static_cast<int>(std::floor(length_z / spacing));
}

std::size_t RisPanel::count() const {
  return static_cast<std::size_t>(count_y()) * static_cast<std::size_t>(count_z());
}

double RisPanel::aperture() const {
  return std::hypot(length_y, length_z);
}

void RisPanel::validate() const {
  if (spacing <= 0.0) {
    throw GeometryError("invalid panel: element spacing must be positive");
  }
  if (count_y() < 1 || count_z() < 1) {
    throw GeometryError("invalid panel: smaller than one element");
  }
  if (tilt < 0.0 || tilt >= kPi / 2.0) {
    throw GeometryError("invalid panel: tilt must lie in [0, pi/2)");
  }
  if (radiation_exponent < 0.0) {
    throw GeometryError("invalid panel: radiation exponent must be nonnegative");
  }
}

void CanyonScenario::validate() const {
  if (height <= 0.0 || width <= 0.0 || region_length <= 0.0) {
    throw GeometryError("invalid canyon: dimensions must be positive");
  }
}

Vec3 tilt_transform(const Vec3& local, double tilt, double center_height) {
  const double s = std::sin(tilt);
  const double c = std::cos(tilt);
  return {local.z * s, local.y, local.z * c + center_height};
}

Vec3 tilted_boresight(double tilt) {
  return {std::cos(tilt), 0.0, -std::sin(tilt)};
}

std::vector<Vec3> element_grid(const RisPanel& panel) {
  panel.validate();
  const int ny = panel.count_y();
  const int nz = panel.count_z();
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(ny) * nz);
  for (int iz = 0; iz < nz; ++iz) {
    const double zl = (iz - 0.5 * (nz - 1)) * panel.spacing;
    for (int iy = 0; iy < ny; ++iy) {
      const double yl = (iy - 0.5 * (ny - 1)) * panel.spacing;
      Vec3 p = tilt_transform({0.0, yl, zl}, panel.tilt, panel.center.z);
      p.x += panel.center.x;
      p.y += panel.center.y;
      out.push_back(p);
    }
  }
  return out;
}

double elevation_cos_signed(const Vec3& p, const Vec3& axis) {
  const double n = p.norm();
  if (n <= 0.0) {
    throw GeometryError("degenerate geometry: zero-length direction");
  }
  return p.dot(axis) / n;
}

double elevation_cos(const Vec3& p, const Vec3& axis) {
  return std::fabs(elevation_cos_signed(p, axis));
}

double fraunhofer_distance(double aperture, double lambda) {
  return 2.0 * aperture * aperture / lambda;
}

double slant_range(double elevation, double altitude, double earth_radius) {
  const double rc = earth_radius * std::cos(elevation);
  const double orbit = earth_radius + altitude;
  return std::sqrt(orbit * orbit - rc * rc) - earth_radius * std::sin(elevation);
}

Vec3 sat_position(double elevation, double altitude, double earth_radius, const Vec3& origin) {
  if (elevation <= 0.0) {
    throw GeometryError("satellite below the horizon");
  }
  if (altitude <= 0.0) {
    throw GeometryError("satellite altitude must be positive");
  }
  const double d = slant_range(elevation, altitude, earth_radius);
  return origin + Vec3{std::cos(elevation), 0.0, std::sin(elevation)} * d;
}

std::vector<Vec3> PanelGeometry::elements() const {
  std::vector<Vec3> out(size());
  for (std::size_t n = 0; n < size(); ++n) {
    out[n] = element(n);
  }
  return out;
}

PanelGeometry materialize(const RisPanel& panel) {
  PanelGeometry g;
  g.panel = panel;
  g.axis = tilted_boresight(panel.tilt);
  const std::vector<Vec3> pts = element_grid(panel);
  g.ex.resize(pts.size());
  g.ey.resize(pts.size());
  g.ez.resize(pts.size());
  for (std::size_t n = 0; n < pts.size(); ++n) {
    g.ex[n] = pts[n].x;
    g.ey[n] = pts[n].y;
    g.ez[n] = pts[n].z;
  }
  return g;
}

}  // namespace rislink
