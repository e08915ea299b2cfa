#include <algorithm>
#include <cstddef>

#include "propsim/kernels/kernels.hpp"

namespace propsim::kernels {
namespace {

NpOverlap np_overlap_scalar(const double* x, const double* y, std::size_t n) {
  NpOverlap r;
  for (std::size_t k = 0; k < n; ++k) {
    const double px = std::max(x[k], 0.0), nx = std::max(-x[k], 0.0);
    const double py = std::max(y[k], 0.0), ny = std::max(-y[k], 0.0);
    r.shared += std::min(px, py) + std::min(nx, ny);
    r.joined += std::max(px, py) + std::max(nx, ny);
    r.total_x += px + nx;
    r.total_y += py + ny;
  }
  return r;
}

double np_ratio_sum_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double px = std::max(x[k], 0.0), nx = std::max(-x[k], 0.0);
    const double py = std::max(y[k], 0.0), ny = std::max(-y[k], 0.0);
    const double num = std::min(px, py) + std::min(nx, ny);
    const double den = std::max(px, py) + std::max(nx, ny);
    sum += den == 0.0 ? 1.0 : num / den;
  }
  return sum;
}

double squared_distance_scalar(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = x[k] - y[k];
    sum += d * d;
  }
  return sum;
}

SignMoments sign_moments_scalar(const double* x, std::size_t n) {
  SignMoments m;
  if (n == 0) return m;
  m.min = m.max = x[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    m.sum += v;
    if (v > 0.0) {
      m.sum_sq_pos += v * v;
      ++m.n_pos;
    } else if (v < 0.0) {
      m.sum_sq_neg += v * v;
      ++m.n_neg;
    }
    m.min = std::min(m.min, v);
    m.max = std::max(m.max, v);
  }
  return m;
}

double centered_sum_sq_scalar(const double* x, std::size_t n, double center) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - center;
    sum += d * d;
  }
  return sum;
}

void affine_scalar(const double* x, double* out, std::size_t n, double shift, double scale) {
  for (std::size_t i = 0; i < n; ++i) out[i] = (x[i] - shift) / scale;
}

void signed_scale_scalar(const double* x, double* out, std::size_t n, double pos_div,
                         double neg_div) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    out[i] = v > 0.0 ? v / pos_div : (v < 0.0 ? v / neg_div : v);
  }
}

constexpr KernelTable kScalar{
    np_overlap_scalar,      np_ratio_sum_scalar, squared_distance_scalar,
    sign_moments_scalar,    centered_sum_sq_scalar, affine_scalar,
    signed_scale_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace propsim::kernels
