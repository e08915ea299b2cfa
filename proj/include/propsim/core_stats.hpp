#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace propsim {

/// N data elements (rows) by M real-valued features (columns), stored
/// row-major, with optional per-row category labels.
class FeatureMatrix {
 public:
  /// Validates shape, finiteness and name uniqueness; throws Error(validation).
  FeatureMatrix(std::size_t rows, std::vector<std::string> feature_names,
                std::vector<double> values,
                std::optional<std::vector<std::string>> labels = std::nullopt);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return names_.size(); }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols(), cols()};
  }
  std::vector<double> column(std::size_t k) const;
  /// Replaces column k; the new values must be finite.
  void set_column(std::size_t k, std::span<const double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<std::string>& feature_names() const noexcept { return names_; }
  const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

  /// Index of a feature by name, or nullopt.
  std::optional<std::size_t> find_feature(const std::string& name) const;

  bool operator==(const FeatureMatrix&) const = default;

 private:
  std::size_t rows_;
  std::vector<std::string> names_;
  std::vector<double> values_;
  std::optional<std::vector<std::string>> labels_;
};

/// Per-feature summary. `std` uses the N-1 divisor and is 0 for a single
/// sample (`count == 1`). The xi dispersions are non-central RMS values of
/// the strictly positive and strictly negative samples; zeros count in
/// neither population.
struct ColumnStats {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double std = 0.0;
  double xi_p = 0.0;
  double xi_n = 0.0;
  std::size_t n_p = 0;
  std::size_t n_n = 0;
};

ColumnStats column_stats(std::span<const double> column);

/// Stats for every column, computed independently (in parallel for wide
/// matrices); results do not depend on the thread count.
std::vector<ColumnStats> matrix_stats(const FeatureMatrix& m);

/// Parses comma-separated text with a header row. A column named "label"
/// carries categories; every other column must be numeric.
FeatureMatrix load_matrix(std::istream& in);
FeatureMatrix load_matrix_file(const std::string& path);

/// Writes features then "label" (if present), doubles at 17 significant digits.
void write_matrix(std::ostream& out, const FeatureMatrix& m);
void write_matrix_file(const std::string& path, const FeatureMatrix& m);

/// Round-trip formatting used for every numeric output of the library.
std::string format_double(double v);

}  // namespace propsim
