#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "propsim/error.hpp"
#include "propsim/transform.hpp"

namespace propsim {
namespace {

std::vector<double> proportional_samples(double c, double a, double b, std::size_t n,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(a, b);
  std::vector<double> out(n);
  for (auto& y : out) y = std::pow(c, u(rng));
  return out;
}

TEST(ApplyTransform, WorkedExamples) {
  EXPECT_EQ(apply_transform(TransformSpec::proportional(2), 3), 8.0);
  EXPECT_EQ(apply_transform(TransformSpec::signed_proportional(2), -2), -4.0);
  EXPECT_EQ(apply_transform(TransformSpec::power(2), -3), 9.0);
}

TEST(ApplyTransform, SignedProportionalJumpAtZero) {
  const auto g = TransformSpec::signed_proportional(2);
  EXPECT_EQ(apply_transform(g, 0.0), 1.0);
  EXPECT_NEAR(apply_transform(g, -1e-12), -1.0, 1e-11);
  EXPECT_NEAR(apply_transform(g, 1e-12), 1.0, 1e-11);
}

TEST(ApplyTransform, SignedProportionalIsOdd) {
  const auto g = TransformSpec::signed_proportional(2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    if (x == 0.0) continue;
    EXPECT_EQ(apply_transform(g, -x), -apply_transform(g, x));
  }
}

TEST(ApplyTransform, RejectsOutOfRangeResults) {
  EXPECT_THROW(apply_transform(TransformSpec::proportional(2), 2000), Error);
  EXPECT_THROW(apply_transform(TransformSpec::proportional(2), -2000), Error);
  EXPECT_THROW(apply_transform(TransformSpec::power(3), 1e200), Error);
  try {
    apply_transform(TransformSpec::proportional(10), 400);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::range);
    EXPECT_NE(std::string(e.what()).find("400"), std::string::npos);
  }
}

TEST(TransformSpec, FactoriesValidate) {
  EXPECT_THROW(TransformSpec::proportional(1.0), Error);
  EXPECT_THROW(TransformSpec::proportional(0.5), Error);
  EXPECT_THROW(TransformSpec::signed_proportional(-2), Error);
  EXPECT_THROW(TransformSpec::power(0), Error);
  EXPECT_NO_THROW(TransformSpec::proportional(1.0001));
}

TEST(TransformProperty, ProportionalIdentity) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10, 10), base(1.01, 5);
  for (int i = 0; i < 2000; ++i) {
    const auto f = TransformSpec::proportional(base(rng));
    const double x = u(rng), a = u(rng);
    const double lhs = apply_transform(f, x + a);
    const double rhs = apply_transform(f, a) * apply_transform(f, x);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
  }
}

TEST(TransformProperty, IntervalEndpointsScaleByBeta) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5), base(1.01, 5);
  for (int i = 0; i < 1000; ++i) {
    const auto f = TransformSpec::proportional(base(rng));
    double x1 = u(rng), x2 = u(rng);
    if (x1 > x2) std::swap(x1, x2);
    const double a = u(rng);
    const double beta = apply_transform(f, a);
    // Translating the uniform interval by a maps the proportional interval
    // [f(x1), f(x2)] onto [beta f(x1), beta f(x2)].
    EXPECT_NEAR(apply_transform(f, x1 + a) / (beta * apply_transform(f, x1)), 1.0, 1e-12);
    EXPECT_NEAR(apply_transform(f, x2 + a) / (beta * apply_transform(f, x2)), 1.0, 1e-12);
  }
}

TEST(TransformedDensity, UniformThroughExpAtZero) {
  const auto f = TransformSpec::proportional(std::numbers::e);
  const auto uniform01 = [](double x) { return x >= 0.0 && x <= 1.0 ? 1.0 : 0.0; };
  EXPECT_NEAR(transformed_density(f, uniform01, 0.0), 1.0, 1e-15);
}

TEST(TransformedDensity, ZeroDensityStaysZero) {
  const auto zero = [](double) { return 0.0; };
  EXPECT_EQ(transformed_density(TransformSpec::proportional(2), zero, 0.3), 0.0);
  EXPECT_EQ(transformed_density(TransformSpec::power(3), zero, 2.0), 0.0);
}

TEST(TransformedDensity, PowerLawWithUnitExponent) {
  // Base 2 over [0, 1]: p_y(y) = k / y with k = 1 / ln 2.
  const auto f = TransformSpec::proportional(2);
  const auto uniform01 = [](double x) { return x >= 0.0 && x <= 1.0 ? 1.0 : 0.0; };
  for (double x = 0.0; x <= 1.0; x += 0.05) {
    const double y = std::pow(2.0, x);
    EXPECT_NEAR(transformed_density(f, uniform01, x), (1.0 / std::numbers::ln2) / y, 1e-14);
  }
}

TEST(TransformedDensity, SingularDerivative) {
  const auto one = [](double) { return 1.0; };
  try {
    transformed_density(TransformSpec::power(2), one, 0.0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singularity);
  }
}

TEST(LogLogSlope, ProportionalSamplesGiveMinusOne) {
  const auto ys = proportional_samples(2.0, 0.0, 10.0, 1000000, 1);
  EXPECT_NEAR(loglog_slope(ys, 40), -1.0, 0.05);
}

TEST(LogLogSlope, UniformSamplesAreFlat) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(1.0, 2.0);
  std::vector<double> ys(1000000);
  for (auto& y : ys) y = u(rng);
  EXPECT_NEAR(loglog_slope(ys, 40), 0.0, 0.05);
}

TEST(LogLogSlope, ScaleFreeForBaseNearOne) {
  const auto ys = proportional_samples(1.0001, 0.0, 50000.0, 1000000, 3);
  EXPECT_NEAR(loglog_slope(ys, 40), -1.0, 0.05);
}

TEST(LogLogSlope, ConstantSamplesAreDegenerate) {
  const std::vector<double> ys(20000, 3.0);
  try {
    loglog_slope(ys, 40);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_fit);
  }
}

TEST(LogLogSlope, Preconditions) {
  const auto ys = proportional_samples(2.0, 0.0, 10.0, 100, 4);
  EXPECT_THROW(loglog_slope(ys, 9), Error);
  const std::vector<double> negative = {1.0, -2.0, 3.0};
  EXPECT_THROW(loglog_slope(negative, 10), Error);
  const auto fit = fit_loglog(ys, 10);
  EXPECT_EQ(fit.samples, 100u);
  EXPECT_LE(fit.used_bins, 10u);
  EXPECT_GT(fit.slope_stderr, 0.0);
}

}  // namespace
}  // namespace propsim
