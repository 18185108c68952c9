#pragma once

#include <algorithm>
#include <cmath>

#include "sbci/kernels.hpp"

namespace sbci::kernels_detail {
namespace {

template <UnitKind K>
inline double unit_scalar(double x, double y) {
  if constexpr (K == UnitKind::LK) {
    return std::min(1.0, 1.0 - x + y);
  } else if constexpr (K == UnitKind::R) {
    return 1.0 - x + x * y;
  } else if constexpr (K == UnitKind::GD) {
    return x <= y ? 1.0 : y;
  } else if constexpr (K == UnitKind::FD) {
    return x <= y ? 1.0 : std::max(1.0 - x, y);
  } else if constexpr (K == UnitKind::YG) {
    return x == 0.0 && y == 0.0 ? 1.0 : std::pow(y, x);
  } else {
    return x < 1.0 ? 1.0 : y;
  }
}

}  // namespace
}  // namespace sbci::kernels_detail
