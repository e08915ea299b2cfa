#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "propsim/core_stats.hpp"

namespace propsim {

enum class NormalizationMethod { standardize, spn, jpn };

std::string_view method_name(NormalizationMethod m) noexcept;
std::optional<NormalizationMethod> parse_method(std::string_view name) noexcept;

/// (x - mean) / std. Throws Error(constant_column) when std is 0.
std::vector<double> standardize(std::span<const double> column);

/// Separated proportional normalization: positive entries divided by xi_p,
/// negative entries by xi_n, zeros kept. A sign population that is empty
/// is left alone.
std::vector<double> spn(std::span<const double> column);

/// Joint proportional normalization: every entry divided by max(xi_p, xi_n).
/// Throws Error(zero_dispersion) for an all-zero column.
std::vector<double> jpn(std::span<const double> column);

std::vector<double> normalize_column(std::span<const double> column, NormalizationMethod method);

/// Applies `method` to each feature independently; labels are kept. Column
/// errors are rethrown with the feature name prefixed.
FeatureMatrix normalize_matrix(const FeatureMatrix& m, NormalizationMethod method);

}  // namespace propsim
