#include "rislink/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rislink/csv.hpp"
#include "rislink/selfcheck.hpp"

namespace rislink {

namespace {

namespace fs = std::filesystem;

std::string prepare_out_dir(const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory: " + out_dir);
  }
  return out_dir;
}

std::string write_resolved_config(const RunConfig& config, const std::string& out_dir) {
  const std::string path = (fs::path(out_dir) / "config.resolved.json").string();
  write_text_file(path, config.resolved_json());
  return path;
}

std::string snr_field(const SnrResult& r) {
  return r.blocked ? std::string{} : format_g9(r.snr_db);
}

std::string elevation_tag(double rad) {
  return format_g9(rad_to_deg(rad));
}

}  // namespace

CommandResult run_coverage(const RunConfig& config, const std::string& out_dir) {
  prepare_out_dir(out_dir);
  CommandResult result;
  result.files_written.push_back(write_resolved_config(config, out_dir));

  const PanelGeometry panel = materialize(config.panel);
  for (double elevation : config.elevations) {
    const SnrGrid map = coverage_map(config.link, panel, config.canyon, config.constellation,
                                     elevation, config.grid, LinkKind::ris, config.workers);
    CsvTable table;
    table.header = "x_m,y_m,snr_db,blocked";
    table.rows.reserve(map.snr_db.size());
    const int nx = map.grid.nx();
    const int ny = map.grid.ny();
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const std::size_t i = map.index(ix, iy);
        std::string row = format_g9(map.cell_x(ix));
        row += ',';
        row += format_g9(map.cell_y(iy));
        row += ',';
        if (!map.blocked[i]) {
          row += format_g9(map.snr_db[i]);
        }
        row += ',';
        row += map.blocked[i] ? '1' : '0';
        table.rows.push_back(std::move(row));
      }
    }
    const std::string path =
        (fs::path(out_dir) / ("coverage_elev" + elevation_tag(elevation) + ".csv")).string();
    write_text_file(path, table.to_string());
    result.files_written.push_back(path);
  }
  return result;
}

CommandResult run_tilt_sweep(const RunConfig& config, const std::string& out_dir) {
  prepare_out_dir(out_dir);
  CommandResult result;
  result.files_written.push_back(write_resolved_config(config, out_dir));

  const double elevation = config.elevations.empty() ? deg_to_rad(45.0) : config.elevations.front();
  const Vec3 sat = sat_position(elevation, config.constellation.altitude,
                                config.constellation.earth_radius, config.panel.center);

  CsvTable table;
  table.header = "theta0_deg,user_id,snr_db,blocked";
  const int count =
      static_cast<int>(std::floor((config.tilt_max - config.tilt_min) / config.tilt_step + 1e-9)) +
      1;
  for (int i = 0; i < count; ++i) {
    const double tilt = std::min(config.tilt_min + i * config.tilt_step, config.tilt_max);
    RisPanel panel = config.panel;
    panel.tilt = tilt;
    const PanelGeometry geom = materialize(panel);
    for (std::size_t u = 0; u < config.users.size(); ++u) {
      const SnrResult r = snr_ris_tilted(config.link, geom, sat, config.users[u]);
      std::string row = format_g9(rad_to_deg(tilt));
      row += ',';
      row += std::to_string(u);
      row += ',';
      row += snr_field(r);
      row += ',';
      row += r.blocked ? '1' : '0';
      table.rows.push_back(std::move(row));
    }
  }
  const std::string path = (fs::path(out_dir) / "tilt_sweep.csv").string();
  write_text_file(path, table.to_string());
  result.files_written.push_back(path);
  return result;
}

CommandResult run_double_ris(const RunConfig& config, const std::string& out_dir) {
  prepare_out_dir(out_dir);
  CommandResult result;
  result.files_written.push_back(write_resolved_config(config, out_dir));

  DoubleRisScenario scenario;
  scenario.panel_left = config.panel;
  scenario.panel_right = config.panel;
  scenario.canyon = config.canyon;
  scenario.constellation = config.constellation;

  const int steps = static_cast<int>(std::floor(config.canyon.width / config.grid.spacing));
  for (double elevation : config.elevations) {
    scenario.sat1_elevation = elevation;
    scenario.sat2_elevation = companion_elevation(elevation, config.constellation);

    CsvTable table;
    table.header = "user_x_m,link,snr_db,blocked";
    for (int i = 0; i < steps; ++i) {
      const double x = (i + 0.5) * config.grid.spacing;
      const DoubleRisResult r =
          double_ris_evaluate(scenario, config.link, Vec3{x, 0.0, 0.0});
      const std::pair<const char*, const SnrResult*> links[] = {
          {"los1", &r.los1}, {"los2", &r.los2}, {"ris1", &r.ris1}, {"ris2", &r.ris2}};
      for (const auto& [name, snr] : links) {
        std::string row = format_g9(x);
        row += ',';
        row += name;
        row += ',';
        row += snr_field(*snr);
        row += ',';
        row += snr->blocked ? '1' : '0';
        table.rows.push_back(std::move(row));
      }
    }
    const std::string path =
        (fs::path(out_dir) / ("double_ris_elev" + elevation_tag(elevation) + ".csv")).string();
    write_text_file(path, table.to_string());
    result.files_written.push_back(path);
  }
  return result;
}

CommandResult run_blockage_table(const RunConfig& config, const std::string& out_dir,
                                 std::ostream& table_out) {
  prepare_out_dir(out_dir);
  CommandResult result;
  result.files_written.push_back(write_resolved_config(config, out_dir));

  struct Row {
    std::string name;
    ConstellationSpec spec;
    bool fitted;
  };
  std::vector<Row> sources;
  if (config.preset == "custom") {
    sources.push_back({"custom", config.constellation, false});
  } else {
    const ConstellationPreset* p = find_preset(config.preset);
    if (p == nullptr) {
      throw ConfigError("config: constellation.preset: unknown preset '" + config.preset + "'");
    }
    sources.push_back({p->name, p->spec(), p->fitted});
  }
  if (config.preset == "all") {
    sources.clear();
    for (const ConstellationPreset& p : constellation_presets()) {
      sources.push_back({p.name, p.spec(), p.fitted});
    }
  }

  std::vector<double> ratios = {1.4, 2.0, 2.4};
  const double own_ratio = config.canyon.aspect_ratio();
  if (config.preset == "custom" &&
      std::none_of(ratios.begin(), ratios.end(),
                   [own_ratio](double r) { return std::fabs(r - own_ratio) < 1e-12; })) {
    ratios.push_back(own_ratio);
  }

  CsvTable table;
  table.header = "constellation,aspect_ratio,blockage_ratio_pct,q_min,q_min_exact,q_th,fitted";
  table_out << std::left << std::setw(18) << "constellation" << std::setw(7) << "H/W"
            << std::setw(8) << "T_B%" << std::setw(7) << "Q_min" << std::setw(12) << "Q_min_exact"
            << std::setw(6) << "Q_th" << "fitted\n";
  for (const Row& src : sources) {
    for (double ratio : ratios) {
      CanyonScenario canyon = config.canyon;
      canyon.height = canyon.width * ratio;
      const BlockageReport rep = blockage_report(src.spec, canyon);

      std::ostringstream pct;
      pct << std::fixed << std::setprecision(1) << 100.0 * rep.t_b;

      std::string row = src.name;
      row += ',';
      row += format_g9(ratio);
      row += ',';
      row += pct.str();
      row += ',';
      row += std::to_string(rep.q_min);
      row += ',';
      row += format_g9(rep.q_min_exact);
      row += ',';
      row += std::to_string(rep.q_th);
      row += ',';
      row += src.fitted ? '1' : '0';
      table.rows.push_back(std::move(row));

      std::ostringstream ratio_txt;
      ratio_txt << std::setprecision(3) << ratio;
      table_out << std::left << std::setw(18) << src.name << std::setw(7) << ratio_txt.str()
                << std::setw(8) << pct.str() << std::setw(7) << rep.q_min << std::setw(12)
                << format_g9(rep.q_min_exact) << std::setw(6) << rep.q_th
                << (src.fitted ? "yes" : "no") << "\n";
    }
  }

  const std::string path = (fs::path(out_dir) / "blockage_table.csv").string();
  write_text_file(path, table.to_string());
  result.files_written.push_back(path);
  return result;
}

int run_validate(const RunConfig& config, std::ostream& out) {
  const std::vector<CheckResult> checks = run_selfchecks(config);
  int failures = 0;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  residual=" << format_g9(c.residual);
    if (!c.detail.empty()) {
      out << "  (" << c.detail << ")";
    }
    out << "\n";
    if (!c.pass) {
      ++failures;
    }
  }
  out << (failures == 0 ? "all checks passed\n"
                        : std::to_string(failures) + " check(s) failed\n");
  return failures;
}

}  // namespace rislink
