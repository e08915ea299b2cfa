#include "propsim/normalize.hpp"

#include <algorithm>

#include "propsim/error.hpp"
#include "propsim/kernels/kernels.hpp"

namespace propsim {

std::string_view method_name(NormalizationMethod m) noexcept {
  switch (m) {
    case NormalizationMethod::standardize: return "standardize";
    case NormalizationMethod::spn: return "spn";
    case NormalizationMethod::jpn: return "jpn";
  }
  return "unknown";
}

std::optional<NormalizationMethod> parse_method(std::string_view name) noexcept {
  for (auto m : {NormalizationMethod::standardize, NormalizationMethod::spn,
                 NormalizationMethod::jpn})
    if (name == method_name(m)) return m;
  return std::nullopt;
}

std::vector<double> standardize(std::span<const double> column) {
  const ColumnStats s = column_stats(column);
  if (!(s.std > 0.0))
    throw Error(ErrorCode::constant_column, "standardize: column has zero standard deviation");
  std::vector<double> out(column.size());
  kernels::active().affine(column.data(), out.data(), column.size(), s.mean, s.std);
  return out;
}

std::vector<double> spn(std::span<const double> column) {
  const ColumnStats s = column_stats(column);
  // An empty side has xi = 0; its divisor is never used, so any value works.
  const double pos = s.n_p > 0 ? s.xi_p : 1.0;
  const double neg = s.n_n > 0 ? s.xi_n : 1.0;
  std::vector<double> out(column.size());
  kernels::active().signed_scale(column.data(), out.data(), column.size(), pos, neg);
  return out;
}

std::vector<double> jpn(std::span<const double> column) {
  const ColumnStats s = column_stats(column);
  const double xi = std::max(s.xi_p, s.xi_n);
  if (!(xi > 0.0)) throw Error(ErrorCode::zero_dispersion, "jpn: column is all zeros");
  std::vector<double> out(column.size());
  kernels::active().signed_scale(column.data(), out.data(), column.size(), xi, xi);
  return out;
}

std::vector<double> normalize_column(std::span<const double> column, NormalizationMethod method) {
  switch (method) {
    case NormalizationMethod::standardize: return standardize(column);
    case NormalizationMethod::spn: return spn(column);
    case NormalizationMethod::jpn: return jpn(column);
  }
  throw Error(ErrorCode::domain, "unknown normalization method");
}

FeatureMatrix normalize_matrix(const FeatureMatrix& m, NormalizationMethod method) {
  FeatureMatrix out = m;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    try {
      out.set_column(k, normalize_column(m.column(k), method));
    } catch (const Error& e) {
      throw Error(e.code(), "feature '" + m.feature_names()[k] + "': " + e.what());
    }
  }
  return out;
}

}  // namespace propsim
