#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "propsim/error.hpp"
#include "propsim/kernels/kernels.hpp"

namespace propsim::kernels {
namespace {

// Lengths straddle every vector width and tail size.
const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 67, 1001};

double rel_err(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return std::abs(a - b) / scale;
}

class BackendEquivalence : public ::testing::TestWithParam<Backend> {};

TEST_P(BackendEquivalence, ReductionsMatchScalarReference) {
  const KernelTable& ref = scalar_table();
  const KernelTable& simd = table_for(GetParam());
  std::mt19937_64 rng(7);
  for (std::size_t n : kLengths) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = oracle::random_vector(rng, n);
      const auto y = oracle::random_vector(rng, n);
      const auto a = ref.np_overlap(x.data(), y.data(), n);
      const auto b = simd.np_overlap(x.data(), y.data(), n);
      EXPECT_LT(rel_err(a.shared, b.shared), 1e-13) << "n=" << n;
      EXPECT_LT(rel_err(a.joined, b.joined), 1e-13) << "n=" << n;
      EXPECT_LT(rel_err(a.total_x, b.total_x), 1e-13) << "n=" << n;
      EXPECT_LT(rel_err(a.total_y, b.total_y), 1e-13) << "n=" << n;
      EXPECT_LT(rel_err(ref.np_ratio_sum(x.data(), y.data(), n),
                        simd.np_ratio_sum(x.data(), y.data(), n)),
                1e-13);
      EXPECT_LT(rel_err(ref.squared_distance(x.data(), y.data(), n),
                        simd.squared_distance(x.data(), y.data(), n)),
                1e-13);
      EXPECT_LT(rel_err(ref.centered_sum_sq(x.data(), n, 0.25),
                        simd.centered_sum_sq(x.data(), n, 0.25)),
                1e-13);

      const auto ma = ref.sign_moments(x.data(), n);
      const auto mb = simd.sign_moments(x.data(), n);
      EXPECT_EQ(ma.n_pos, mb.n_pos);
      EXPECT_EQ(ma.n_neg, mb.n_neg);
      EXPECT_EQ(ma.min, mb.min);
      EXPECT_EQ(ma.max, mb.max);
      EXPECT_LT(rel_err(ma.sum, mb.sum), 1e-13);
      EXPECT_LT(rel_err(ma.sum_sq_pos, mb.sum_sq_pos), 1e-13);
      EXPECT_LT(rel_err(ma.sum_sq_neg, mb.sum_sq_neg), 1e-13);
    }
  }
}

TEST_P(BackendEquivalence, ElementwiseKernelsAreBitIdentical) {
  const KernelTable& ref = scalar_table();
  const KernelTable& simd = table_for(GetParam());
  std::mt19937_64 rng(11);
  for (std::size_t n : kLengths) {
    const auto x = oracle::random_vector(rng, n, 1e3);
    std::vector<double> a(n), b(n);
    ref.affine(x.data(), a.data(), n, 1.5, 3.25);
    simd.affine(x.data(), b.data(), n, 1.5, 3.25);
    EXPECT_EQ(a, b);
    ref.signed_scale(x.data(), a.data(), n, 2.5, 0.75);
    simd.signed_scale(x.data(), b.data(), n, 2.5, 0.75);
    EXPECT_EQ(a, b);
  }
}

TEST_P(BackendEquivalence, ZeroPairsCountAsFullSimilarity) {
  const KernelTable& simd = table_for(GetParam());
  const std::vector<double> x = {0, 0, 0, 0, 0, 3, -1};
  const std::vector<double> y = {0, 0, 0, 0, 0, 1, -2};
  // five 0/0 terms plus 1/3 and 1/2
  EXPECT_NEAR(simd.np_ratio_sum(x.data(), y.data(), x.size()), 5.0 + 1.0 / 3.0 + 0.5, 1e-15);
}

INSTANTIATE_TEST_SUITE_P(AllBackends, BackendEquivalence,
                         ::testing::ValuesIn(available_backends()),
                         [](const auto& info) { return std::string(backend_name(info.param)); });

TEST(KernelDispatch, ScalarIsAlwaysAvailable) {
  const auto b = available_backends();
  ASSERT_FALSE(b.empty());
  EXPECT_EQ(b.front(), Backend::scalar);
}

TEST(KernelDispatch, SwitchingBackendsIsObservable) {
  const Backend before = active_backend();
  for (Backend b : available_backends()) {
    set_active_backend(b);
    EXPECT_EQ(active_backend(), b);
  }
  set_active_backend(before);
}

TEST(KernelDispatch, UnavailableBackendIsRejected) {
  for (Backend b : {Backend::avx2, Backend::neon}) {
    const auto avail = available_backends();
    if (std::find(avail.begin(), avail.end(), b) != avail.end()) continue;
    EXPECT_THROW(set_active_backend(b), Error);
  }
}

}  // namespace
}  // namespace propsim::kernels
