#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "propsim/datagen.hpp"
#include "propsim/error.hpp"
#include "propsim/normalize.hpp"

namespace propsim {
namespace {

void expect_near_all(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "at " << i;
}

// Columns with varying length, sign balance and scale; some one-sided.
std::vector<double> random_column(std::mt19937_64& rng, int rep) {
  std::uniform_int_distribution<std::size_t> len(2, 200);
  std::uniform_real_distribution<double> scale(0.01, 100.0), u(0.0, 1.0);
  const double sp = scale(rng), sn = scale(rng);
  const double p_neg = (rep % 5 == 0) ? 0.0 : (rep % 7 == 0 ? 1.0 : u(rng));
  std::vector<double> c(len(rng));
  for (auto& v : c) {
    const double r = u(rng);
    if (r < 0.05) v = 0.0;
    else v = u(rng) < p_neg ? -sn * u(rng) : sp * u(rng);
  }
  if (std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; })) c[0] = 1.0;
  return c;
}

TEST(Standardize, WorkedExamples) {
  expect_near_all(standardize(std::vector<double>{1, 2, 3}), {-1, 0, 1}, 1e-15);
  expect_near_all(standardize(std::vector<double>{10, 20}),
                  {-0.7071067811865475, 0.7071067811865475}, 1e-15);
}

TEST(Standardize, ConstantColumnIsAnError) {
  try {
    standardize(std::vector<double>{5, 5, 5});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constant_column);
  }
  EXPECT_THROW(standardize(std::vector<double>{5}), Error);
}

TEST(Spn, WorkedExamples) {
  expect_near_all(spn(std::vector<double>{-1, 2, 4}), {-1, 0.6324555320336759, 1.2649110640673518},
                  1e-15);
  const auto out = spn(std::vector<double>{3, 4});
  expect_near_all(out, {0.848528137423857, 1.131370849898476}, 1e-15);
  EXPECT_NEAR(oracle::xi(out, +1), 1.0, 1e-12);
  EXPECT_EQ(spn(std::vector<double>{0, 0, 0}), (std::vector<double>{0, 0, 0}));
}

TEST(Jpn, WorkedExamples) {
  expect_near_all(jpn(std::vector<double>{-1, 2, 4}),
                  {-0.31622776601683794, 0.6324555320336759, 1.2649110640673518}, 1e-15);
  expect_near_all(jpn(std::vector<double>{-4, 4}), {-1, 1}, 0.0);
  try {
    jpn(std::vector<double>{0, 0});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_dispersion);
  }
}

TEST(NormalizeProperty, StandardizationPostconditions) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 500; ++rep) {
    auto c = random_column(rng, rep);
    if (oracle::stddev(c) == 0.0) continue;
    const auto out = standardize(c);
    EXPECT_LT(std::abs(oracle::mean(out)), 1e-12);
    EXPECT_LT(std::abs(oracle::stddev(out) - 1.0), 1e-12);
  }
}

TEST(NormalizeProperty, SpnUnitDispersionsScalingOnly) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 500; ++rep) {
    const auto c = random_column(rng, rep);
    const auto out = spn(c);
    if (oracle::xi(c, +1) > 0) EXPECT_NEAR(oracle::xi(out, +1), 1.0, 1e-12);
    if (oracle::xi(c, -1) > 0) EXPECT_NEAR(oracle::xi(out, -1), 1.0, 1e-12);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(std::signbit(out[i]) && out[i] != 0.0, std::signbit(c[i]) && c[i] != 0.0);
      if (c[i] == 0.0) EXPECT_EQ(out[i], 0.0);
    }
    expect_near_all(spn(out), out, 1e-12);
  }
}

TEST(NormalizeProperty, JpnLargestDispersionIsOne) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 500; ++rep) {
    const auto c = random_column(rng, rep);
    const auto out = jpn(c);
    const double xp = oracle::xi(out, +1), xn = oracle::xi(out, -1);
    EXPECT_NEAR(std::max(xp, xn), 1.0, 1e-12);
    EXPECT_LE(std::min(xp, xn), 1.0 + 1e-12);
    // Both sides share one divisor, so the ratio of dispersions survives.
    if (oracle::xi(c, +1) > 0 && oracle::xi(c, -1) > 0)
      EXPECT_NEAR(xp / xn, oracle::xi(c, +1) / oracle::xi(c, -1), 1e-12 * xp / xn);
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(out[i] > 0.0, c[i] > 0.0);
      EXPECT_EQ(out[i] < 0.0, c[i] < 0.0);
    }
    expect_near_all(jpn(out), out, 1e-12);
  }
}

TEST(NormalizeMatrix, StandardizeEveryColumn) {
  const FeatureMatrix m(4, {"a", "b"}, {1, 10, 2, 30, 3, 20, 4, 40},
                        std::vector<std::string>{"A", "A", "B", "B"});
  const auto out = normalize_matrix(m, NormalizationMethod::standardize);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto c = out.column(k);
    EXPECT_LT(std::abs(oracle::mean(c)), 1e-12);
    EXPECT_NEAR(oracle::stddev(c), 1.0, 1e-12);
  }
  EXPECT_EQ(out.labels(), m.labels());
  EXPECT_EQ(out.feature_names(), m.feature_names());
}

TEST(NormalizeMatrix, ColumnErrorNamesFeature) {
  const FeatureMatrix m(3, {"ok", "flat"}, {1, 7, 2, 7, 3, 7});
  try {
    normalize_matrix(m, NormalizationMethod::standardize);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constant_column);
    EXPECT_NE(std::string(e.what()).find("'flat'"), std::string::npos);
  }
}

TEST(NormalizeMatrix, ProportionalDatasetDispersions) {
  const auto data = build_dataset({1, 100, Representation::proportional});
  const auto f1 = data.column(0);
  ASSERT_GT(oracle::xi(f1, +1), oracle::xi(f1, -1));

  // SPN: both sides of feature 1 reach unit dispersion.
  const auto s = normalize_matrix(data, NormalizationMethod::spn).column(0);
  EXPECT_NEAR(oracle::xi(s, +1), 1.0, 1e-12);
  EXPECT_NEAR(oracle::xi(s, -1), 1.0, 1e-12);

  // JPN: only the larger (positive) side does.
  const auto j = normalize_matrix(data, NormalizationMethod::jpn).column(0);
  EXPECT_NEAR(oracle::xi(j, +1), 1.0, 1e-12);
  EXPECT_LT(oracle::xi(j, -1), 0.5);
}

TEST(NormalizationMethod, NamesRoundTrip) {
  for (auto m : {NormalizationMethod::standardize, NormalizationMethod::spn,
                 NormalizationMethod::jpn})
    EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_FALSE(parse_method("minmax").has_value());
}

}  // namespace
}  // namespace propsim
