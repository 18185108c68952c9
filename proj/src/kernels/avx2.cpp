// Compiled with -mavx2 only; reached through kernels() after a CPU check.
#include <immintrin.h>

#include "sbci/kernels.hpp"
#include "unit_scalar.hpp"

namespace sbci::kernels_detail {

namespace {

constexpr std::size_t kLanes = 4;

template <UnitKind K>
inline __m256d lanes(__m256d x, __m256d y) {
  const __m256d one = _mm256_set1_pd(1.0);
  if constexpr (K == UnitKind::LK) {
    return _mm256_min_pd(_mm256_add_pd(_mm256_sub_pd(one, x), y), one);
  } else if constexpr (K == UnitKind::R) {
    return _mm256_add_pd(_mm256_sub_pd(one, x), _mm256_mul_pd(x, y));
  } else if constexpr (K == UnitKind::GD) {
    return _mm256_blendv_pd(y, one, _mm256_cmp_pd(x, y, _CMP_LE_OQ));
  } else if constexpr (K == UnitKind::FD) {
    const __m256d m = _mm256_max_pd(y, _mm256_sub_pd(one, x));
    return _mm256_blendv_pd(m, one, _mm256_cmp_pd(x, y, _CMP_LE_OQ));
  } else {
    return _mm256_blendv_pd(y, one, _mm256_cmp_pd(x, one, _CMP_LT_OQ));
  }
}

template <UnitKind K>
void eval(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t i = 0;
  if constexpr (K != UnitKind::YG) {
    for (; i + kLanes <= n; i += kLanes) {
      _mm256_storeu_pd(out + i, lanes<K>(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    }
  }
  // pow has no vector form here; YG stays scalar in every backend
  for (; i < n; ++i) out[i] = unit_scalar<K>(x[i], y[i]);
}

void near(const double* a, const double* b, double eps, std::uint8_t* mask, std::size_t n) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d e = _mm256_set1_pd(eps);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d d = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)),
                                    abs_mask);
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(d, e, _CMP_LE_OQ));
    for (std::size_t k = 0; k < kLanes; ++k) mask[i + k] = (bits >> k) & 1;
  }
  for (; i < n; ++i) mask[i] = std::fabs(a[i] - b[i]) <= eps;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{
      {eval<UnitKind::LK>, eval<UnitKind::R>, eval<UnitKind::GD>, eval<UnitKind::FD>,
       eval<UnitKind::YG>, eval<UnitKind::WB>},
      near};
  return t;
}

}  // namespace sbci::kernels_detail
