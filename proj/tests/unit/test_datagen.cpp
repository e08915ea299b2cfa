#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "propsim/datagen.hpp"
#include "propsim/error.hpp"

namespace propsim {
namespace {

TEST(SampleMixture, SingleNormalMoments) {
  const auto xs = sample_mixture(mixtures::q3(), 100000, 17);
  EXPECT_NEAR(oracle::mean(xs), 3.0, 0.02);
  EXPECT_NEAR(oracle::stddev(xs), 1.0, 0.02);
}

TEST(SampleMixture, EqualWeightNegativeFraction) {
  const auto xs = sample_mixture(mixtures::q1(), 100000, 18);
  const double neg = static_cast<double>(std::count_if(xs.begin(), xs.end(),
                                                       [](double v) { return v < 0.0; })) /
                     static_cast<double>(xs.size());
  EXPECT_NEAR(neg, 0.5, 0.01);
}

TEST(SampleMixture, EmptyAndDeterministic) {
  EXPECT_TRUE(sample_mixture(mixtures::q2(), 0, 1).empty());
  EXPECT_EQ(sample_mixture(mixtures::q2(), 500, 5), sample_mixture(mixtures::q2(), 500, 5));
  EXPECT_NE(sample_mixture(mixtures::q2(), 500, 5), sample_mixture(mixtures::q2(), 500, 6));
}

TEST(SampleMixture, TransformAppliedLast) {
  MixtureSpec spec = mixtures::q1();
  const auto plain = sample_mixture(spec, 1000, 9);
  spec.transform = mixtures::g();
  const auto transformed = sample_mixture(spec, 1000, 9);
  for (std::size_t i = 0; i < plain.size(); ++i)
    EXPECT_EQ(transformed[i], apply_transform(mixtures::g(), plain[i]));
}

TEST(MixtureSpec, Validation) {
  EXPECT_THROW((MixtureSpec{{{0.5, 0, 1}, {0.4, 1, 1}}, std::nullopt}.validate()), Error);
  EXPECT_THROW((MixtureSpec{{{1.0, 0, 0}}, std::nullopt}.validate()), Error);
  EXPECT_THROW((MixtureSpec{{}, std::nullopt}.validate()), Error);
  EXPECT_NO_THROW(mixtures::q1().validate());
}

TEST(BuildDataset, ShapeAndLabels) {
  const auto m = build_dataset({1, 100, Representation::proportional});
  EXPECT_EQ(m.rows(), 200u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m.feature_names(), (std::vector<std::string>{"f1", "f2"}));
  const auto& labels = *m.labels();
  EXPECT_EQ(std::count(labels.begin(), labels.end(), "A"), 100);
  EXPECT_EQ(labels.front(), "A");
  EXPECT_EQ(labels.back(), "B");
  EXPECT_THROW(build_dataset({1, 1, Representation::uniform}), Error);
}

TEST(BuildDataset, CategoryBNegativeClusterMean) {
  const auto m = build_dataset({2, 10000, Representation::uniform});
  std::vector<double> neg;
  for (std::size_t i = 10000; i < 20000; ++i)
    if (m.at(i, 0) < 1.0) neg.push_back(m.at(i, 0));
  EXPECT_NEAR(oracle::mean(neg), -2.5, 0.02);
  EXPECT_NEAR(oracle::stddev(neg), 0.2, 0.01);
}

TEST(BuildDataset, ProportionalValuesHaveMagnitudeAtLeastOne) {
  const auto u = build_dataset({3, 500, Representation::uniform});
  const auto p = build_dataset({3, 500, Representation::proportional});
  for (std::size_t i = 0; i < p.rows(); ++i) {
    EXPECT_GE(std::abs(p.at(i, 0)), 1.0);
    const double x = u.at(i, 0);
    const double brute = x >= 0.0 ? std::pow(2.0, x) : -std::pow(2.0, -x);
    EXPECT_EQ(p.at(i, 0), brute);
  }
}

TEST(BuildDataset, DeterministicAndConsistentAcrossRepresentations) {
  for (std::uint64_t seed : {1u, 7u, 12345u}) {
    const auto u = build_dataset({seed, 50, Representation::uniform});
    EXPECT_EQ(u, build_dataset({seed, 50, Representation::uniform}));
    const auto p = build_dataset({seed, 50, Representation::proportional});
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t k = 0; k < u.cols(); ++k)
        EXPECT_EQ(p.at(i, k), apply_transform(mixtures::g(), u.at(i, k)));
  }
}

TEST(BuildDataset, CategoriesShareSecondFeature) {
  const auto m = build_dataset({4, 10000, Representation::uniform});
  const auto f2 = m.column(1);
  const std::vector<double> a(f2.begin(), f2.begin() + 10000), b(f2.begin() + 10000, f2.end());
  EXPECT_LT(std::abs(oracle::mean(a) - oracle::mean(b)), 0.05);
}

}  // namespace
}  // namespace propsim
