#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sbci {

/// The named implications on [0,1].
enum class UnitKind : std::uint8_t { LK, R, GD, FD, YG, WB };
inline constexpr std::size_t kUnitKindCount = 6;

enum class Backend : std::uint8_t { scalar, avx2 };

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view s);

/// Lane kernels. Every backend must produce bit-identical results.
struct KernelTable {
  /// out[i] = kind(x[i], y[i])
  void (*eval[kUnitKindCount])(const double* x, const double* y, double* out, std::size_t n);
  /// mask[i] = |a[i] - b[i]| <= eps
  void (*near)(const double* a, const double* b, double eps, std::uint8_t* mask, std::size_t n);
};

bool backend_available(Backend b);
/// Throws Error when the backend is not available on this machine.
const KernelTable& kernels(Backend b);
/// avx2 when the CPU supports it, unless SBCI_KERNELS names another
/// available backend.
Backend active_backend();

namespace kernels_detail {
const KernelTable& scalar_table();
#if defined(__x86_64__)
const KernelTable& avx2_table();
#endif
}  // namespace kernels_detail

}  // namespace sbci
