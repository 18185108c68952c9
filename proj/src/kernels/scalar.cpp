#include <algorithm>
#include <cmath>

#include "sbci/kernels.hpp"
#include "unit_scalar.hpp"

namespace sbci::kernels_detail {

namespace {

template <UnitKind K>
void eval(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = unit_scalar<K>(x[i], y[i]);
}

void near(const double* a, const double* b, double eps, std::uint8_t* mask, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) mask[i] = std::fabs(a[i] - b[i]) <= eps;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{
      {eval<UnitKind::LK>, eval<UnitKind::R>, eval<UnitKind::GD>, eval<UnitKind::FD>,
       eval<UnitKind::YG>, eval<UnitKind::WB>},
      near};
  return t;
}

}  // namespace sbci::kernels_detail
