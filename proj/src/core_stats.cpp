#include "propsim/core_stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "propsim/error.hpp"
#include "propsim/kernels/kernels.hpp"

namespace propsim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    cells.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

FeatureMatrix::FeatureMatrix(std::size_t rows, std::vector<std::string> feature_names,
                             std::vector<double> values,
                             std::optional<std::vector<std::string>> labels)
    : rows_(rows),
      names_(std::move(feature_names)),
      values_(std::move(values)),
      labels_(std::move(labels)) {
  if (rows_ == 0) throw Error(ErrorCode::validation, "feature matrix needs at least one row");
  if (names_.empty())
    throw Error(ErrorCode::validation, "feature matrix needs at least one feature");
  if (values_.size() != rows_ * names_.size())
    throw Error(ErrorCode::validation, "value count does not match rows x features");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorCode::validation, "empty feature name");
    if (!seen.insert(n).second)
      throw Error(ErrorCode::validation, "duplicate feature name '" + n + "'");
  }
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw Error(ErrorCode::validation, "non-finite value at row " +
                                             std::to_string(i / cols() + 1) + ", column " +
                                             names_[i % cols()]);
  if (labels_ && labels_->size() != rows_)
    throw Error(ErrorCode::validation, "label count does not match row count");
  if (labels_)
    for (const auto& l : *labels_)
      if (l.find_first_of(",\t\r\n") != std::string::npos)
        throw Error(ErrorCode::validation, "label '" + l + "' contains a delimiter");
}

std::vector<double> FeatureMatrix::column(std::size_t k) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, k);
  return out;
}

void FeatureMatrix::set_column(std::size_t k, std::span<const double> values) {
  if (values.size() != rows_) throw Error(ErrorCode::validation, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::validation, "non-finite value at row " + std::to_string(i + 1) +
                                             ", column " + names_[k]);
    values_[i * cols() + k] = values[i];
  }
}

std::optional<std::size_t> FeatureMatrix::find_feature(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ColumnStats column_stats(std::span<const double> column) {
  if (column.empty()) throw Error(ErrorCode::domain, "column_stats: empty column");
  for (std::size_t i = 0; i < column.size(); ++i)
    if (!std::isfinite(column[i]))
      throw Error(ErrorCode::validation,
                  "column_stats: non-finite entry at position " + std::to_string(i));

  const auto m = kernels::sign_moments(column);
  const auto n = static_cast<double>(column.size());
  ColumnStats s;
  s.count = column.size();
  s.min = m.min;
  s.max = m.max;
  s.mean = std::clamp(m.sum / n, m.min, m.max);
  s.std = column.size() > 1 ? std::sqrt(kernels::centered_sum_sq(column, s.mean) / (n - 1.0))
                            : 0.0;
  s.n_p = m.n_pos;
  s.n_n = m.n_neg;
  s.xi_p = m.n_pos > 0 ? std::sqrt(m.sum_sq_pos / static_cast<double>(m.n_pos)) : 0.0;
  s.xi_n = m.n_neg > 0 ? std::sqrt(m.sum_sq_neg / static_cast<double>(m.n_neg)) : 0.0;
  return s;
}

std::vector<ColumnStats> matrix_stats(const FeatureMatrix& m) {
  std::vector<ColumnStats> out(m.cols());
  const std::size_t workers =
      std::min<std::size_t>(m.cols(), std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1 || m.cols() * m.rows() < (1u << 16)) {
    for (std::size_t k = 0; k < m.cols(); ++k) out[k] = column_stats(m.column(k));
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < m.cols(); k += workers) out[k] = column_stats(m.column(k));
    });
  return out;
}

FeatureMatrix load_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line).empty())
    throw Error(ErrorCode::validation, "no header");

  const auto header = split_csv(line);
  std::vector<std::string> names;
  std::optional<std::size_t> label_col;
  std::unordered_set<std::string> seen;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::string name(header[c]);
    if (name.empty())
      throw Error(ErrorCode::validation, "empty header cell at column " + std::to_string(c + 1));
    if (name == "label") {
      if (label_col) throw Error(ErrorCode::validation, "duplicate 'label' column");
      label_col = c;
      continue;
    }
    if (!seen.insert(name).second)
      throw Error(ErrorCode::validation,
                  "duplicate feature name '" + name + "' at column " + std::to_string(c + 1));
    names.push_back(std::move(name));
  }
  if (names.empty()) throw Error(ErrorCode::validation, "header has no feature columns");

  std::vector<double> values;
  std::vector<std::string> labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const auto cells = split_csv(line);
    if (cells.size() != header.size())
      throw Error(ErrorCode::validation, "ragged row " + std::to_string(row) + ": expected " +
                                             std::to_string(header.size()) + " cells, got " +
                                             std::to_string(cells.size()));
    std::size_t feature = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (label_col && c == *label_col) {
        labels.emplace_back(cells[c]);
        continue;
      }
      const auto v = parse_double(cells[c]);
      if (!v)
        throw Error(ErrorCode::validation, "non-numeric value '" + std::string(cells[c]) +
                                               "' at row " + std::to_string(row) +
                                               ", column " + names[feature]);
      values.push_back(*v);
      ++feature;
    }
  }
  if (row == 0) throw Error(ErrorCode::validation, "no data rows");

  std::optional<std::vector<std::string>> lab;
  if (label_col) lab = std::move(labels);
  return FeatureMatrix(row, std::move(names), std::move(values), std::move(lab));
}

FeatureMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "' for reading");
  return load_matrix(in);
}

std::string format_double(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_matrix(std::ostream& out, const FeatureMatrix& m) {
  const auto& names = m.feature_names();
  for (std::size_t k = 0; k < names.size(); ++k) out << (k ? "," : "") << names[k];
  if (m.labels()) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) out << (k ? "," : "") << format_double(m.at(i, k));
    if (m.labels()) out << ',' << (*m.labels())[i];
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const FeatureMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  write_matrix(out, m);
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

}  // namespace propsim
