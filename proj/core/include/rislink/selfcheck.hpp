#pragma once

#include <string>
#include <vector>

#include "rislink/config.hpp"

namespace rislink {

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // worst relative error or deviation observed
  std::string detail;
};

// Deterministic cross-checks of the core numerics:
//  - closed-form phase setting never beaten by exhaustive quantized search,
//    and its amplitude equals the coherent sum;
//  - explicit-matrix cascade SNR equals the closed-form link SNR;
//  - element gain closed form against numeric quadrature;
//  - published constellation blockage ratios.
std::vector<CheckResult> run_selfchecks(const RunConfig& config);

}  // namespace rislink
