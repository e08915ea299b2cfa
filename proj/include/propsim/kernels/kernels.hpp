#pragma once
// Data-parallel inner loops shared by the statistics, normalization and
// similarity modules. Every kernel has a scalar reference implementation;
// SIMD variants (AVX2 on x86-64, NEON on aarch64) are selected at runtime
// and must agree with the reference up to summation-order rounding.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace propsim::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b) noexcept;

/// Multiset overlap terms of two equal-length vectors in np-set form.
struct NpOverlap {
  double shared = 0.0;   // sum_k min(pos) + min(neg magnitude)
  double joined = 0.0;   // sum_k max(pos) + max(neg magnitude)
  double total_x = 0.0;  // sum_k |x_k|
  double total_y = 0.0;  // sum_k |y_k|
};

/// Single-pass moments of a column split by sign. Zeros count in neither side.
struct SignMoments {
  double sum = 0.0;
  double sum_sq_pos = 0.0;
  double sum_sq_neg = 0.0;
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  double min = 0.0;
  double max = 0.0;
};

struct KernelTable {
  NpOverlap (*np_overlap)(const double* x, const double* y, std::size_t n);
  // Sum over k of per-coordinate np-set min/max ratios; 0/0 terms count as 1.
  double (*np_ratio_sum)(const double* x, const double* y, std::size_t n);
  double (*squared_distance)(const double* x, const double* y, std::size_t n);
  SignMoments (*sign_moments)(const double* x, std::size_t n);
  double (*centered_sum_sq)(const double* x, std::size_t n, double center);
  // out = (x - shift) / scale
  void (*affine)(const double* x, double* out, std::size_t n, double shift, double scale);
  // out = x / pos_div for x > 0, x / neg_div for x < 0, 0 unchanged
  void (*signed_scale)(const double* x, double* out, std::size_t n, double pos_div, double neg_div);
};

const KernelTable& scalar_table() noexcept;
#if defined(PROPSIM_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif
#if defined(PROPSIM_HAVE_NEON)
const KernelTable& neon_table() noexcept;
#endif

/// Backends compiled in and supported by the running CPU, scalar first.
std::vector<Backend> available_backends();

/// Table for a specific backend; throws Error(domain) if unavailable.
const KernelTable& table_for(Backend b);

/// Currently selected backend. Defaults to the widest available one unless
/// the PROPSIM_KERNELS environment variable names another ("scalar", ...).
Backend active_backend() noexcept;
void set_active_backend(Backend b);
const KernelTable& active() noexcept;

// Convenience wrappers over the active table.
inline NpOverlap np_overlap(std::span<const double> x, std::span<const double> y) {
  return active().np_overlap(x.data(), y.data(), x.size());
}
inline double np_ratio_sum(std::span<const double> x, std::span<const double> y) {
  return active().np_ratio_sum(x.data(), y.data(), x.size());
}
inline double squared_distance(std::span<const double> x, std::span<const double> y) {
  return active().squared_distance(x.data(), y.data(), x.size());
}
inline SignMoments sign_moments(std::span<const double> x) {
  return active().sign_moments(x.data(), x.size());
}
inline double centered_sum_sq(std::span<const double> x, double center) {
  return active().centered_sum_sq(x.data(), x.size(), center);
}

}  // namespace propsim::kernels
