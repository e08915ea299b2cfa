#include "propsim/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "propsim/core_stats.hpp"
#include "propsim/error.hpp"

namespace propsim {

TransformSpec TransformSpec::proportional(double base) {
  if (!(base > 1.0) || !std::isfinite(base))
    throw Error(ErrorCode::domain, "proportional transform needs base c > 1");
  return {TransformKind::proportional, base, 1};
}

TransformSpec TransformSpec::signed_proportional(double base) {
  if (!(base > 1.0) || !std::isfinite(base))
    throw Error(ErrorCode::domain, "signed proportional transform needs base c > 1");
  return {TransformKind::signed_proportional, base, 1};
}

TransformSpec TransformSpec::power(int exponent) {
  if (exponent < 1) throw Error(ErrorCode::domain, "power transform needs exponent q >= 1");
  return {TransformKind::power, 0.0, exponent};
}

double apply_transform(const TransformSpec& spec, double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::domain, "transform input must be finite");
  double y = 0.0;
  switch (spec.kind()) {
    case TransformKind::proportional:
      y = std::pow(spec.base(), x);
      break;
    case TransformKind::signed_proportional:
      y = x >= 0.0 ? std::pow(spec.base(), x) : -std::pow(spec.base(), -x);
      break;
    case TransformKind::power:
      y = std::pow(x, spec.exponent());
      break;
  }
  // c^x of 0 (underflow) would break every ratio built on it, same as inf.
  const bool underflow = spec.kind() != TransformKind::power && y == 0.0;
  if (!std::isfinite(y) || underflow)
    throw Error(ErrorCode::range, "transform of x = " + format_double(x) +
                                      " is outside the representable range");
  return y;
}

double transformed_density(const TransformSpec& spec, const std::function<double(double)>& p_x,
                           double x) {
  const double px = p_x(x);
  if (!std::isfinite(px)) throw Error(ErrorCode::domain, "p_x(x) must be finite");
  double slope = 0.0;
  switch (spec.kind()) {
    case TransformKind::proportional:
      slope = std::log(spec.base()) * std::pow(spec.base(), x);
      break;
    case TransformKind::signed_proportional:
      slope = std::log(spec.base()) * std::pow(spec.base(), std::abs(x));
      break;
    case TransformKind::power:
      slope = spec.exponent() * std::pow(x, spec.exponent() - 1);
      break;
  }
  if (slope == 0.0 || !std::isfinite(slope))
    throw Error(ErrorCode::singularity,
                "transform derivative vanishes or overflows at x = " + format_double(x));
  if (px == 0.0) return 0.0;
  return px / std::abs(slope);
}

SlopeFit fit_loglog(std::span<const double> samples, std::size_t bins) {
  if (bins < 10) throw Error(ErrorCode::domain, "log-log fit needs at least 10 bins");
  if (samples.empty()) throw Error(ErrorCode::degenerate_fit, "no samples to fit");
  for (double v : samples)
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::domain, "log-log fit needs finite positive samples");

  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  const double log_lo = std::log(*lo_it);
  const double log_hi = std::log(*hi_it);
  if (!(log_hi > log_lo))
    throw Error(ErrorCode::degenerate_fit, "all samples fall in a single bin");

  const double step = (log_hi - log_lo) / static_cast<double>(bins);
  std::vector<std::size_t> counts(bins, 0);
  for (double v : samples) {
    auto b = static_cast<std::size_t>((std::log(v) - log_lo) / step);
    counts[std::min(b, bins - 1)]++;
  }

  const auto n = static_cast<double>(samples.size());
  std::vector<double> xs, ys;
  for (std::size_t b = 0; b < bins; ++b) {
    if (counts[b] == 0) continue;
    const double e0 = log_lo + step * static_cast<double>(b);
    const double e1 = e0 + step;
    const double width = std::exp(e1) - std::exp(e0);
    xs.push_back(0.5 * (e0 + e1));
    ys.push_back(std::log(static_cast<double>(counts[b]) / (n * width)));
  }
  if (xs.size() < 2)
    throw Error(ErrorCode::degenerate_fit, "fewer than two occupied bins");

  const auto m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }

  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.bins = bins;
  fit.used_bins = xs.size();
  fit.samples = samples.size();
  if (xs.size() > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
      ssr += r * r;
    }
    fit.slope_stderr = std::sqrt(ssr / (m - 2.0) / sxx);
  } else {
    fit.slope_stderr = std::numeric_limits<double>::infinity();
  }
  return fit;
}

double loglog_slope(std::span<const double> samples, std::size_t bins) {
  return fit_loglog(samples, bins).slope;
}

}  // namespace propsim
