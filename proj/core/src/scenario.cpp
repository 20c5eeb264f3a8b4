#include "rislink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace rislink {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Static contiguous split of [0, n) across workers; each range writes only
// its own slots, so the assembled output does not depend on the worker count.
template <typename Fn>
void parallel_for(std::size_t n, int workers, const Fn& fn) {
  if (workers <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  const std::size_t chunk = (n + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& th : pool) {
    th.join();
  }
}

double elevation_at_central_angle(double beta, const ConstellationSpec& spec) {
  const double orbit = spec.earth_radius + spec.altitude;
  const double x = orbit * std::sin(beta);
  const double z = orbit * std::cos(beta) - spec.earth_radius;
  return std::atan2(z, x);
}

double central_angle_at_elevation(double alpha, const ConstellationSpec& spec) {
  const double ratio = spec.earth_radius / (spec.earth_radius + spec.altitude);
  return std::acos(ratio * std::cos(alpha)) - alpha;
}

Vec3 mirror_x(const Vec3& p, double width) { return {width - p.x, p.y, p.z}; }

}  // namespace

int GridSpec::nx() const {
  return static_cast<int>(std::floor((x_max - x_min) / spacing + 1e-9));
}

int GridSpec::ny() const {
  return static_cast<int>(std::floor((y_max - y_min) / spacing + 1e-9));
}

void GridSpec::validate() const {
  if (spacing <= 0.0) {
    throw ConfigError("grid spacing must be positive");
  }
  if (nx() < 1 || ny() < 1) {
    throw ConfigError("coverage grid is empty");
  }
}

SnrGrid coverage_map(const LinkParams& params, const PanelGeometry& panel,
                     const CanyonScenario& canyon, const ConstellationSpec& constellation,
                     double sat_elevation, const GridSpec& grid, LinkKind kind, int workers) {
  grid.validate();
  canyon.validate();
  params.validate();

  SnrGrid out;
  out.grid = grid;
  out.sat_elevation = sat_elevation;
  out.panel = panel.panel;
  out.kind = kind;
  const int nx = grid.nx();
  const int ny = grid.ny();
  const std::size_t cells = static_cast<std::size_t>(nx) * ny;
  out.snr_db.assign(cells, kNegInf);
  out.blocked.assign(cells, 1);

  const Vec3 sat = sat_position(sat_elevation, constellation.altitude,
                                constellation.earth_radius, panel.panel.center);

  parallel_for(cells, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const int ix = static_cast<int>(i % nx);
      const int iy = static_cast<int>(i / nx);
      const Vec3 user{out.cell_x(ix), out.cell_y(iy), 0.0};
      SnrResult r;
      switch (kind) {
        case LinkKind::los:
          r = snr_los(params, sat, user, canyon);
          break;
        case LinkKind::ris_tilted:
          r = snr_ris_tilted(params, panel, sat, user);
          break;
        case LinkKind::ris:
        default:
          r = snr_ris(params, panel, sat, user);
          break;
      }
      out.snr_db[i] = r.snr_db;
      out.blocked[i] = r.blocked ? 1 : 0;
    }
  });
  return out;
}

TiltResult optimal_tilt(const LinkParams& params, const RisPanel& panel, const Vec3& sat,
                        const Vec3& user, double tilt_min, double tilt_max, double step) {
  if (step <= 0.0) {
    throw ConfigError("tilt step must be positive");
  }
  if (tilt_max < tilt_min) {
    throw ConfigError("empty tilt range");
  }
  TiltResult best;
  best.snr.snr_db = kNegInf;
  const int count = static_cast<int>(std::floor((tilt_max - tilt_min) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) {
    const double tilt = std::min(tilt_min + i * step, tilt_max);
    RisPanel tilted = panel;
    tilted.tilt = tilt;
    const SnrResult r = snr_ris_tilted(params, materialize(tilted), sat, user);
    if (i == 0 || r.snr_db > best.snr.snr_db) {
      best.tilt = tilt;
      best.snr = r;
    }
  }
  return best;
}

double companion_elevation(double sat1_elevation, const ConstellationSpec& spec) {
  const double beta1 = central_angle_at_elevation(sat1_elevation, spec);
  const double beta2 = 2.0 * coverage_half_angle(spec.sats_per_orbit) - beta1;
  return elevation_at_central_angle(beta2, spec);
}

DoubleRisResult double_ris_evaluate(const DoubleRisScenario& scenario, const LinkParams& params,
                                    const Vec3& user) {
  const CanyonScenario& canyon = scenario.canyon;
  const ConstellationSpec& constellation = scenario.constellation;
  DoubleRisResult out;

  RisPanel left = scenario.panel_left;
  left.center = {0.0, 0.0, canyon.height};
  RisPanel right_canonical = scenario.panel_right;
  right_canonical.center = {0.0, 0.0, canyon.height};
  const PanelGeometry left_geom = materialize(left);
  const PanelGeometry right_geom = materialize(right_canonical);

  const auto eval_side = [&](const PanelGeometry& geom, double elevation, const Vec3& u,
                             LinkKind) -> SnrResult {
    SnrResult res;
    if (elevation <= 0.0) {
      res.kind = LinkKind::ris;
      res.snr_linear = 0.0;
      res.snr_db = kNegInf;
      res.blocked = true;  // companion satellite below the horizon
      return res;
    }
    const Vec3 sat = sat_position(elevation, constellation.altitude, constellation.earth_radius,
                                  geom.panel.center);
    if (scenario.origin_elevation_approx) {
      // Profile from the canyon-origin elevation; distances stay exact.
      const Vec3 p1 = sat - geom.panel.center;
      const double d1 = p1.norm();
      const double f1 =
          radiation_profile(std::cos(elevation + geom.panel.tilt), geom.panel.radiation_exponent);
      const double amp = coherent_sum(geom, u);
      const double a = coef(params, element_gain(geom.panel.radiation_exponent));
      const double linear = a * a / params.noise_power * f1 / (d1 * d1) * amp * amp;
      SnrResult r;
      r.kind = LinkKind::ris;
      if (linear <= 0.0) {
        r.snr_linear = 0.0;
        r.snr_db = kNegInf;
        r.blocked = true;
      } else {
        r.snr_linear = linear;
        r.snr_db = 10.0 * std::log10(linear);
      }
      return r;
    }
    return snr_ris(params, geom, sat, u);
  };

  // SAT1 on the +x side serves the left panel directly in the canonical frame.
  out.ris1 = eval_side(left_geom, scenario.sat1_elevation, user, LinkKind::ris);
  // SAT2 on the -x side serves the right panel; mirror x -> W - x maps that
  // link onto the canonical frame exactly, so mirrored scenarios swap links
  // bit for bit.
  out.ris2 = eval_side(right_geom, scenario.sat2_elevation, mirror_x(user, canyon.width),
                       LinkKind::ris);

  const auto eval_los = [&](double elevation, const Vec3& u) -> SnrResult {
    SnrResult res;
    if (elevation <= 0.0) {
      res.kind = LinkKind::los;
      res.snr_linear = 0.0;
      res.snr_db = kNegInf;
      res.blocked = true;
      return res;
    }
    const Vec3 sat =
        sat_position(elevation, constellation.altitude, constellation.earth_radius, {0.0, 0.0, 0.0});
    return snr_los(params, sat, u, canyon);
  };
  out.los1 = eval_los(scenario.sat1_elevation, user);
  out.los2 = eval_los(scenario.sat2_elevation, mirror_x(user, canyon.width));

  // Highest finite SNR serves; ties break in the fixed order
  // los1, los2, ris1, ris2.
  const std::pair<ServingLink, const SnrResult*> order[] = {
      {ServingLink::los1, &out.los1},
      {ServingLink::los2, &out.los2},
      {ServingLink::ris1, &out.ris1},
      {ServingLink::ris2, &out.ris2},
  };
  double best = kNegInf;
  out.serving = ServingLink::none;
  for (const auto& [link, r] : order) {
    if (!r->blocked && r->snr_db > best) {
      best = r->snr_db;
      out.serving = link;
    }
  }
  return out;
}

TrajectorySeries trajectory_sweep(const ConstellationSpec& spec, const CanyonScenario& canyon,
                                  const std::vector<RisPanel>& panels,
                                  const std::vector<Vec3>& users, const LinkParams& params,
                                  double step, double elevation_min, double elevation_max) {
  spec.validate();
  canyon.validate();
  if (step <= 0.0) {
    throw ConfigError("trajectory step must be positive");
  }

  TrajectorySeries out;
  out.blocked_fraction.assign(users.size(), 0.0);
  if (elevation_min >= elevation_max) {
    return out;  // empty range, empty series
  }

  std::vector<PanelGeometry> geoms;
  geoms.reserve(panels.size());
  for (const RisPanel& p : panels) {
    geoms.push_back(materialize(p));
  }

  const double beta_max = coverage_half_angle(spec.sats_per_orbit);
  std::vector<std::size_t> blocked_count(users.size(), 0);

  // Midpoint samples uniform in central angle over the coverage window
  // (-beta_max, beta_max); negative beta is the -x side of the canyon.
  const std::size_t samples_total = static_cast<std::size_t>(std::floor(2.0 * beta_max / step));
  for (std::size_t k = 0; k < samples_total; ++k) {
    const double beta = -beta_max + (static_cast<double>(k) + 0.5) * step;
    const double alpha = elevation_at_central_angle(std::fabs(beta), spec);
    if (alpha < elevation_min || alpha > elevation_max) {
      continue;
    }
    const double side = (beta >= 0.0) ? 1.0 : -1.0;

    out.central_angle.push_back(beta);
    out.elevation.push_back(alpha);
    std::vector<double> row(users.size(), kNegInf);
    if (alpha > 0.0) {
      const double d = slant_range(alpha, spec.altitude, spec.earth_radius);
      const Vec3 sat{side * d * std::cos(alpha), 0.0, d * std::sin(alpha)};
      for (std::size_t u = 0; u < users.size(); ++u) {
        double best = kNegInf;
        const SnrResult los = snr_los(params, sat, users[u], canyon);
        if (!los.blocked) {
          best = std::max(best, los.snr_db);
        }
        // Panels see a -x-side satellite behind their plane and report blocked.
        for (const PanelGeometry& g : geoms) {
          const SnrResult ris = snr_ris(params, g, sat, users[u]);
          if (!ris.blocked) {
            best = std::max(best, ris.snr_db);
          }
        }
        row[u] = best;
      }
    }
    for (std::size_t u = 0; u < users.size(); ++u) {
      if (row[u] == kNegInf) {
        ++blocked_count[u];
      }
    }
    out.best_snr_db.push_back(std::move(row));
  }

  const std::size_t samples = out.central_angle.size();
  for (std::size_t u = 0; u < users.size(); ++u) {
    out.blocked_fraction[u] =
        samples ? static_cast<double>(blocked_count[u]) / static_cast<double>(samples) : 0.0;
  }
  return out;
}

}  // namespace rislink
