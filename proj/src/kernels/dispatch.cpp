#include <cstdlib>

#include "sbci/error.hpp"
#include "sbci/kernels.hpp"

namespace sbci {

std::string_view to_string(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

std::optional<Backend> parse_backend(std::string_view s) {
  if (s == "scalar") return Backend::scalar;
  if (s == "avx2") return Backend::avx2;
  return std::nullopt;
}

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& kernels(Backend b) {
  if (!backend_available(b)) {
    throw Error("kernel backend " + std::string(to_string(b)) + " is not available");
  }
#if defined(__x86_64__)
  if (b == Backend::avx2) return kernels_detail::avx2_table();
#endif
  return kernels_detail::scalar_table();
}

Backend active_backend() {
  if (const char* env = std::getenv("SBCI_KERNELS")) {
    if (auto b = parse_backend(env); b && backend_available(*b)) return *b;
  }
  return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

}  // namespace sbci
