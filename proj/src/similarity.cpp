#include "propsim/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "propsim/core_stats.hpp"
#include "propsim/error.hpp"
#include "propsim/kernels/kernels.hpp"

namespace propsim {
namespace {

void require_same_dim(std::span<const double> x, std::span<const double> y, const char* op) {
  if (x.size() != y.size())
    throw Error(ErrorCode::dimension_mismatch, std::string(op) + ": dimension mismatch (" +
                                                   std::to_string(x.size()) + " vs " +
                                                   std::to_string(y.size()) + ")");
}

void require_exponent(double d, const char* what) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw Error(ErrorCode::domain, std::string(what) + " must be a positive finite real");
}

}  // namespace

double euclidean(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "euclidean");
  return std::sqrt(kernels::squared_distance(x, y));
}

double ratio(double x, double y) {
  if (x == 0.0) throw Error(ErrorCode::division, "ratio: reference value is zero");
  return y / x;
}

double scalar_jaccard(double x, double y) {
  if (x < 0.0 || y < 0.0)
    throw Error(ErrorCode::domain, "scalar_jaccard: arguments must be non-negative");
  const double hi = std::max(x, y);
  return hi == 0.0 ? 1.0 : std::min(x, y) / hi;
}

double nonneg_jaccard(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "nonneg_jaccard");
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] < 0.0 || y[k] < 0.0)
      throw Error(ErrorCode::domain, "nonneg_jaccard: entries must be non-negative");
  const auto o = kernels::np_overlap(x, y);
  return o.joined == 0.0 ? 1.0 : o.shared / o.joined;
}

NpSetVector NpSetVector::from(std::span<const double> x) {
  NpSetVector v;
  v.pos.resize(x.size());
  v.neg_mag.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    v.pos[k] = x[k] > 0.0 ? x[k] : 0.0;
    v.neg_mag[k] = x[k] < 0.0 ? -x[k] : 0.0;
  }
  return v;
}

std::vector<double> NpSetVector::reconstruct() const {
  std::vector<double> out(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out[k] = pos[k] - neg_mag[k];
  return out;
}

double NpSetVector::total() const noexcept {
  double t = 0.0;
  for (std::size_t k = 0; k < pos.size(); ++k) t += pos[k] + neg_mag[k];
  return t;
}

IndexParams::IndexParams(double d, double e) : d_(d), e_(e) {
  require_exponent(d, "D");
  require_exponent(e, "E");
}

double np_jaccard(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "np_jaccard");
  const auto o = kernels::np_overlap(x, y);
  return o.joined == 0.0 ? 1.0 : o.shared / o.joined;
}

double np_interiority(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "np_interiority");
  const auto o = kernels::np_overlap(x, y);
  const double smaller = std::min(o.total_x, o.total_y);
  if (!(smaller > 0.0))
    throw Error(ErrorCode::undefined_interiority, "np_interiority: zero vector has no mass");
  return std::min(o.shared / smaller, 1.0);
}

double coincidence(std::span<const double> x, std::span<const double> y, const IndexParams& p) {
  require_same_dim(x, y, "coincidence");
  const auto o = kernels::np_overlap(x, y);
  const double smaller = std::min(o.total_x, o.total_y);
  if (!(smaller > 0.0))
    throw Error(ErrorCode::undefined_interiority, "coincidence: zero vector has no mass");
  const double j = o.shared / o.joined;
  const double i = std::min(o.shared / smaller, 1.0);
  return std::pow(j, p.d()) * std::pow(i, p.e());
}

double modified_jaccard(std::span<const double> x, std::span<const double> y, double d) {
  require_same_dim(x, y, "modified_jaccard");
  require_exponent(d, "D");
  if (x.empty()) throw Error(ErrorCode::dimension_mismatch, "modified_jaccard: empty vectors");
  const double mean = kernels::np_ratio_sum(x, y) / static_cast<double>(x.size());
  return std::pow(std::min(mean, 1.0), d);
}

double power_compare(double value, double d) {
  require_exponent(d, "D");
  if (!(value >= 0.0 && value <= 1.0))
    throw Error(ErrorCode::domain, "power_compare: value must lie in [0, 1]");
  return std::pow(value, d);
}

ComparisonIndex ComparisonIndex::make(IndexKind kind, double d, double e) {
  require_exponent(d, "D");
  require_exponent(e, "E");
  return {kind, d, e};
}

double ComparisonIndex::evaluate(std::span<const double> x, std::span<const double> y) const {
  switch (kind) {
    case IndexKind::euclid: return euclidean(x, y);
    case IndexKind::jaccard: return np_jaccard(x, y);
    case IndexKind::interiority: return np_interiority(x, y);
    case IndexKind::coincidence: return coincidence(x, y, IndexParams(d, e));
    case IndexKind::mjaccard: return modified_jaccard(x, y, d);
    case IndexKind::euclid_complement: break;
  }
  throw Error(ErrorCode::domain, "euclid-complement is only defined over a whole point set");
}

std::string ComparisonIndex::describe() const {
  std::string s(index_name(kind));
  switch (kind) {
    case IndexKind::coincidence:
      return s + "(D=" + format_double(d) + ",E=" + format_double(e) + ")";
    case IndexKind::mjaccard:
      return s + "(D=" + format_double(d) + ")";
    default:
      return s;
  }
}

std::string_view index_name(IndexKind k) noexcept {
  switch (k) {
    case IndexKind::euclid: return "euclid";
    case IndexKind::jaccard: return "jaccard";
    case IndexKind::interiority: return "interiority";
    case IndexKind::coincidence: return "coincidence";
    case IndexKind::mjaccard: return "mjaccard";
    case IndexKind::euclid_complement: return "euclid-complement";
  }
  return "unknown";
}

std::optional<IndexKind> parse_index(std::string_view name) noexcept {
  for (auto k : {IndexKind::euclid, IndexKind::jaccard, IndexKind::interiority,
                 IndexKind::coincidence, IndexKind::mjaccard, IndexKind::euclid_complement})
    if (name == index_name(k)) return k;
  return std::nullopt;
}

}  // namespace propsim
