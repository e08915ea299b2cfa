#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "propsim/error.hpp"
#include "propsim/kernels/kernels.hpp"

namespace propsim::kernels {
namespace {

bool cpu_supports(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(PROPSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(PROPSIM_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend initial_backend() noexcept {
  if (const char* env = std::getenv("PROPSIM_KERNELS")) {
    const std::string_view want(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
      if (want == backend_name(b) && cpu_supports(b)) return b;
  }
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
    if (cpu_supports(b)) out.push_back(b);
  return out;
}

const KernelTable& table_for(Backend b) {
  if (!cpu_supports(b))
    throw Error(ErrorCode::domain,
                "kernel backend '" + std::string(backend_name(b)) + "' is not available");
  switch (b) {
#if defined(PROPSIM_HAVE_AVX2)
    case Backend::avx2: return avx2_table();
#endif
#if defined(PROPSIM_HAVE_NEON)
    case Backend::neon: return neon_table();
#endif
    default: return scalar_table();
  }
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_backend(Backend b) {
  table_for(b);  // validates
  current().store(b, std::memory_order_relaxed);
}

const KernelTable& active() noexcept {
  switch (active_backend()) {
#if defined(PROPSIM_HAVE_AVX2)
    case Backend::avx2: return avx2_table();
#endif
#if defined(PROPSIM_HAVE_NEON)
    case Backend::neon: return neon_table();
#endif
    default: return scalar_table();
  }
}

}  // namespace propsim::kernels
