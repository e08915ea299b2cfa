// NEON variants for aarch64 (two double lanes per register).

#include <arm_neon.h>

#include <algorithm>
#include <cstddef>

#include "propsim/kernels/kernels.hpp"

namespace propsim::kernels {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

NpOverlap np_overlap_neon(const double* x, const double* y, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t shared = zero, joined = zero, tx = zero, ty = zero;
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t vx = vld1q_f64(x + k);
    const float64x2_t vy = vld1q_f64(y + k);
    const float64x2_t px = vmaxq_f64(vx, zero), nx = vmaxq_f64(vsubq_f64(zero, vx), zero);
    const float64x2_t py = vmaxq_f64(vy, zero), ny = vmaxq_f64(vsubq_f64(zero, vy), zero);
    shared = vaddq_f64(shared, vaddq_f64(vminq_f64(px, py), vminq_f64(nx, ny)));
    joined = vaddq_f64(joined, vaddq_f64(vmaxq_f64(px, py), vmaxq_f64(nx, ny)));
    tx = vaddq_f64(tx, vaddq_f64(px, nx));
    ty = vaddq_f64(ty, vaddq_f64(py, ny));
  }
  NpOverlap r{hsum(shared), hsum(joined), hsum(tx), hsum(ty)};
  const NpOverlap tail = scalar_table().np_overlap(x + k, y + k, n - k);
  r.shared += tail.shared;
  r.joined += tail.joined;
  r.total_x += tail.total_x;
  r.total_y += tail.total_y;
  return r;
}

double np_ratio_sum_neon(const double* x, const double* y, std::size_t n) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t acc = zero;
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t vx = vld1q_f64(x + k);
    const float64x2_t vy = vld1q_f64(y + k);
    const float64x2_t px = vmaxq_f64(vx, zero), nx = vmaxq_f64(vsubq_f64(zero, vx), zero);
    const float64x2_t py = vmaxq_f64(vy, zero), ny = vmaxq_f64(vsubq_f64(zero, vy), zero);
    const float64x2_t num = vaddq_f64(vminq_f64(px, py), vminq_f64(nx, ny));
    const float64x2_t den = vaddq_f64(vmaxq_f64(px, py), vmaxq_f64(nx, ny));
    const uint64x2_t empty = vceqq_f64(den, zero);
    const float64x2_t ratio = vdivq_f64(num, vbslq_f64(empty, one, den));
    acc = vaddq_f64(acc, vbslq_f64(empty, one, ratio));
  }
  return hsum(acc) + scalar_table().np_ratio_sum(x + k, y + k, n - k);
}

double squared_distance_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + k), vld1q_f64(y + k));
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  return hsum(acc) + scalar_table().squared_distance(x + k, y + k, n - k);
}

SignMoments sign_moments_neon(const double* x, std::size_t n) {
  if (n < 2) return scalar_table().sign_moments(x, n);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t sum = zero, sq_pos = zero, sq_neg = zero, cnt_pos = zero, cnt_neg = zero;
  float64x2_t lo = vld1q_f64(x), hi = lo;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    const float64x2_t sq = vmulq_f64(v, v);
    const uint64x2_t is_pos = vcgtq_f64(v, zero);
    const uint64x2_t is_neg = vcltq_f64(v, zero);
    sum = vaddq_f64(sum, v);
    sq_pos = vaddq_f64(sq_pos, vbslq_f64(is_pos, sq, zero));
    sq_neg = vaddq_f64(sq_neg, vbslq_f64(is_neg, sq, zero));
    cnt_pos = vaddq_f64(cnt_pos, vbslq_f64(is_pos, one, zero));
    cnt_neg = vaddq_f64(cnt_neg, vbslq_f64(is_neg, one, zero));
    lo = vminq_f64(lo, v);
    hi = vmaxq_f64(hi, v);
  }
  SignMoments m;
  m.sum = hsum(sum);
  m.sum_sq_pos = hsum(sq_pos);
  m.sum_sq_neg = hsum(sq_neg);
  m.n_pos = static_cast<std::size_t>(hsum(cnt_pos));
  m.n_neg = static_cast<std::size_t>(hsum(cnt_neg));
  m.min = std::min(vgetq_lane_f64(lo, 0), vgetq_lane_f64(lo, 1));
  m.max = std::max(vgetq_lane_f64(hi, 0), vgetq_lane_f64(hi, 1));
  for (; i < n; ++i) {
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

double centered_sum_sq_neon(const double* x, std::size_t n, double center) {
  const float64x2_t c = vdupq_n_f64(center);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i), c);
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  return hsum(acc) + scalar_table().centered_sum_sq(x + i, n - i, center);
}

void affine_neon(const double* x, double* out, std::size_t n, double shift, double scale) {
  const float64x2_t s = vdupq_n_f64(shift);
  const float64x2_t d = vdupq_n_f64(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vdivq_f64(vsubq_f64(vld1q_f64(x + i), s), d));
  scalar_table().affine(x + i, out + i, n - i, shift, scale);
}

void signed_scale_neon(const double* x, double* out, std::size_t n, double pos_div,
                       double neg_div) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t pd = vdupq_n_f64(pos_div);
  const float64x2_t nd = vdupq_n_f64(neg_div);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    float64x2_t div = vbslq_f64(vcgtq_f64(v, zero), pd, one);
    div = vbslq_f64(vcltq_f64(v, zero), nd, div);
    vst1q_f64(out + i, vdivq_f64(v, div));
  }
  scalar_table().signed_scale(x + i, out + i, n - i, pos_div, neg_div);
}

constexpr KernelTable kNeon{
    np_overlap_neon,      np_ratio_sum_neon, squared_distance_neon, sign_moments_neon,
    centered_sum_sq_neon, affine_neon,       signed_scale_neon,
};

}  // namespace

const KernelTable& neon_table() noexcept { return kNeon; }

}  // namespace propsim::kernels
