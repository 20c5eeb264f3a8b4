#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rislink/config.hpp"

namespace rislink {

struct CommandResult {
  std::vector<std::string> files_written;
};

// One heatmap CSV per configured elevation (x_m,y_m,snr_db,blocked; blocked
// cells leave the snr field empty) plus the resolved config sidecar.
CommandResult run_coverage(const RunConfig& config, const std::string& out_dir);

// Tilt sweep CSV (theta0_deg,user_id,snr_db,blocked) over the configured
// range for every configured user.
CommandResult run_tilt_sweep(const RunConfig& config, const std::string& out_dir);

// Per-elevation CSVs (user_x_m,link,snr_db,blocked) for the facing-panels
// deployment; four link rows per swept user position.
CommandResult run_double_ris(const RunConfig& config, const std::string& out_dir);

// Blockage table for the selected presets (or the custom constellation) at
// aspect ratios 1.4, 2 and 2.4: formatted text on `table_out` plus a CSV.
CommandResult run_blockage_table(const RunConfig& config, const std::string& out_dir,
                                 std::ostream& table_out);

// Built-in oracle suite; prints one line per check and returns the number of
// failures.
int run_validate(const RunConfig& config, std::ostream& out);

}  // namespace rislink
