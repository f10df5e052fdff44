#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwfano/multidegree.hpp"

namespace gwfano {

struct CheckResult {
  std::string id;
  std::string geometry;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  int order = 8;        // q-order for the series identities
  int order_pad = 0;    // extra q-truncation for the invariant computations
  int window_pad = 0;
  // (p, l, beta) of a c~ entry to perturb by 1 before the convolution check.
  std::optional<std::array<int, 3>> corrupt;
};

// The default acceptance grid.
std::vector<MultiDegree> default_grid();

// Every identity for one geometry, in a fixed order.
std::vector<CheckResult> run_identity_suite(const MultiDegree& md, const SuiteOptions& opts = {});

}  // namespace gwfano
