#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace propsim {

enum class TransformKind { proportional, signed_proportional, power };

/// Feature transformation. Construct through the named factories, which
/// enforce c > 1 for the proportional kinds and q >= 1 for powers.
class TransformSpec {
 public:
  static TransformSpec proportional(double base);
  /// x >= 0 -> c^x, x < 0 -> -c^|x|. Discontinuous at 0 with value +1 there.
  static TransformSpec signed_proportional(double base);
  static TransformSpec power(int exponent);

  TransformKind kind() const noexcept { return kind_; }
  double base() const noexcept { return base_; }
  int exponent() const noexcept { return exponent_; }

  bool operator==(const TransformSpec&) const = default;

 private:
  TransformSpec(TransformKind k, double c, int q) : kind_(k), base_(c), exponent_(q) {}
  TransformKind kind_;
  double base_;
  int exponent_;
};

/// Throws Error(range) if the result is not representable as a finite double.
double apply_transform(const TransformSpec& spec, double x);

/// Density of y = f(x) at y = f(x) by change of variables: p_x(x) / |f'(x)|.
/// Throws Error(singularity) where f'(x) = 0.
double transformed_density(const TransformSpec& spec, const std::function<double(double)>& p_x,
                           double x);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t bins = 0;
  std::size_t used_bins = 0;  // bins with nonzero counts
  std::size_t samples = 0;
};

/// Smallest sample size for which the log-log fit is considered reliable.
inline constexpr std::size_t kMinReliableSamples = 10000;

/// Least-squares fit of log(density) on log(value) over log-spaced bins
/// spanning [min, max] of the samples. Empty bins are excluded.
/// Requires positive samples and bins >= 10; throws Error(degenerate_fit)
/// when fewer than two bins are occupied.
SlopeFit fit_loglog(std::span<const double> samples, std::size_t bins);
double loglog_slope(std::span<const double> samples, std::size_t bins);

}  // namespace propsim
