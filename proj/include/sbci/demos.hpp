#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "sbci/continuous.hpp"
#include "sbci/render.hpp"

namespace sbci {

struct DemoOptions {
  GridSpec grid;
  std::optional<Backend> backend;
};

/// reichenbach-lk, godel-fodor, yager, weber, plane-pbci, markov, interval-lk.
std::span<const std::string_view> demo_names();
bool is_demo(std::string_view name);

/// Runs the suite and compares it with the paper's claims. The last report,
/// "expectations", holds one verdict per claim; exit_code is 0 iff all hold.
/// Throws Error for an unknown name.
RunReport run_demo(std::string_view name, const DemoOptions& opts);

}  // namespace sbci
