// AVX2 variants. This file is compiled with -mavx2 and must only be entered
// after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <algorithm>
#include <cstddef>

#include "propsim/kernels/kernels.hpp"

namespace propsim::kernels {
namespace {

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

inline double hmin(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
}

inline double hmax(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

NpOverlap np_overlap_avx2(const double* x, const double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d shared = zero, joined = zero, tx = zero, ty = zero;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(x + k);
    const __m256d vy = _mm256_loadu_pd(y + k);
    const __m256d px = _mm256_max_pd(vx, zero), nx = _mm256_max_pd(_mm256_sub_pd(zero, vx), zero);
    const __m256d py = _mm256_max_pd(vy, zero), ny = _mm256_max_pd(_mm256_sub_pd(zero, vy), zero);
    shared = _mm256_add_pd(shared, _mm256_add_pd(_mm256_min_pd(px, py), _mm256_min_pd(nx, ny)));
    joined = _mm256_add_pd(joined, _mm256_add_pd(_mm256_max_pd(px, py), _mm256_max_pd(nx, ny)));
    tx = _mm256_add_pd(tx, _mm256_add_pd(px, nx));
    ty = _mm256_add_pd(ty, _mm256_add_pd(py, ny));
  }
  NpOverlap r{hsum(shared), hsum(joined), hsum(tx), hsum(ty)};
  const NpOverlap tail = scalar_table().np_overlap(x + k, y + k, n - k);
  r.shared += tail.shared;
  r.joined += tail.joined;
  r.total_x += tail.total_x;
  r.total_y += tail.total_y;
  return r;
}

double np_ratio_sum_avx2(const double* x, const double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = zero;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(x + k);
    const __m256d vy = _mm256_loadu_pd(y + k);
    const __m256d px = _mm256_max_pd(vx, zero), nx = _mm256_max_pd(_mm256_sub_pd(zero, vx), zero);
    const __m256d py = _mm256_max_pd(vy, zero), ny = _mm256_max_pd(_mm256_sub_pd(zero, vy), zero);
    const __m256d num = _mm256_add_pd(_mm256_min_pd(px, py), _mm256_min_pd(nx, ny));
    const __m256d den = _mm256_add_pd(_mm256_max_pd(px, py), _mm256_max_pd(nx, ny));
    const __m256d empty = _mm256_cmp_pd(den, zero, _CMP_EQ_OQ);
    const __m256d ratio = _mm256_div_pd(num, _mm256_blendv_pd(den, one, empty));
    acc = _mm256_add_pd(acc, _mm256_blendv_pd(ratio, one, empty));
  }
  return hsum(acc) + scalar_table().np_ratio_sum(x + k, y + k, n - k);
}

double squared_distance_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  return hsum(acc) + scalar_table().squared_distance(x + k, y + k, n - k);
}

SignMoments sign_moments_avx2(const double* x, std::size_t n) {
  if (n < 4) return scalar_table().sign_moments(x, n);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d sum = zero, sq_pos = zero, sq_neg = zero, cnt_pos = zero, cnt_neg = zero;
  __m256d lo = _mm256_loadu_pd(x), hi = lo;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d sq = _mm256_mul_pd(v, v);
    const __m256d is_pos = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
    const __m256d is_neg = _mm256_cmp_pd(v, zero, _CMP_LT_OQ);
    sum = _mm256_add_pd(sum, v);
    sq_pos = _mm256_add_pd(sq_pos, _mm256_and_pd(is_pos, sq));
    sq_neg = _mm256_add_pd(sq_neg, _mm256_and_pd(is_neg, sq));
    cnt_pos = _mm256_add_pd(cnt_pos, _mm256_and_pd(is_pos, one));
    cnt_neg = _mm256_add_pd(cnt_neg, _mm256_and_pd(is_neg, one));
    lo = _mm256_min_pd(lo, v);
    hi = _mm256_max_pd(hi, v);
  }
  SignMoments m;
  m.sum = hsum(sum);
  m.sum_sq_pos = hsum(sq_pos);
  m.sum_sq_neg = hsum(sq_neg);
  m.n_pos = static_cast<std::size_t>(hsum(cnt_pos));
  m.n_neg = static_cast<std::size_t>(hsum(cnt_neg));
  m.min = hmin(lo);
  m.max = hmax(hi);
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

double centered_sum_sq_avx2(const double* x, std::size_t n, double center) {
  const __m256d c = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), c);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  return hsum(acc) + scalar_table().centered_sum_sq(x + i, n - i, center);
}

void affine_avx2(const double* x, double* out, std::size_t n, double shift, double scale) {
  const __m256d s = _mm256_set1_pd(shift);
  const __m256d d = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), s), d));
  scalar_table().affine(x + i, out + i, n - i, shift, scale);
}

void signed_scale_avx2(const double* x, double* out, std::size_t n, double pos_div,
                       double neg_div) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d pd = _mm256_set1_pd(pos_div);
  const __m256d nd = _mm256_set1_pd(neg_div);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    __m256d div = _mm256_blendv_pd(one, pd, _mm256_cmp_pd(v, zero, _CMP_GT_OQ));
    div = _mm256_blendv_pd(div, nd, _mm256_cmp_pd(v, zero, _CMP_LT_OQ));
    _mm256_storeu_pd(out + i, _mm256_div_pd(v, div));
  }
  scalar_table().signed_scale(x + i, out + i, n - i, pos_div, neg_div);
}

constexpr KernelTable kAvx2{
    np_overlap_avx2,      np_ratio_sum_avx2,    squared_distance_avx2, sign_moments_avx2,
    centered_sum_sq_avx2, affine_avx2,          signed_scale_avx2,
};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace propsim::kernels
