#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace propsim {

// --- uniform comparisons ----------------------------------------------------

/// Signed difference y - x.
inline double diff(double x, double y) noexcept { return y - x; }
inline double abs_diff(double x, double y) noexcept { return y > x ? y - x : x - y; }
double euclidean(std::span<const double> x, std::span<const double> y);

// --- proportional comparisons -----------------------------------------------

/// y / x; throws Error(division) for x = 0.
double ratio(double x, double y);

/// min/max of two non-negative scalars; (0, 0) is 1.
double scalar_jaccard(double x, double y);

/// sum min / sum max over non-negative vectors; two zero vectors give 1.
double nonneg_jaccard(std::span<const double> x, std::span<const double> y);

/// Real vector split into positive parts and negative-part magnitudes.
struct NpSetVector {
  std::vector<double> pos;
  std::vector<double> neg_mag;

  static NpSetVector from(std::span<const double> x);
  std::size_t dim() const noexcept { return pos.size(); }
  std::vector<double> reconstruct() const;
  double total() const noexcept;
};

/// Exponents of the coincidence index, both strictly positive and finite.
class IndexParams {
 public:
  IndexParams(double d, double e);
  double d() const noexcept { return d_; }
  double e() const noexcept { return e_; }

 private:
  double d_;
  double e_;
};

/// Multiset Jaccard over np-sets. Two zero vectors give 1.
double np_jaccard(std::span<const double> x, std::span<const double> y);

/// Shared np-set mass over the smaller total mass. Throws
/// Error(undefined_interiority) when either vector is all zeros.
double np_interiority(std::span<const double> x, std::span<const double> y);

/// J^D * I^E.
double coincidence(std::span<const double> x, std::span<const double> y, const IndexParams& p);

/// Mean of per-feature np-set min/max ratios (0/0 terms are 1), raised to D.
double modified_jaccard(std::span<const double> x, std::span<const double> y, double d = 1.0);

/// value^D for value in [0, 1]; order preserving.
double power_compare(double value, double d);

// --- index descriptor -------------------------------------------------------

enum class IndexKind { euclid, jaccard, interiority, coincidence, mjaccard, euclid_complement };

/// A comparison index together with its parameters, used wherever the
/// caller picks the index at runtime (networks, receptive fields, CLI).
struct ComparisonIndex {
  IndexKind kind = IndexKind::coincidence;
  double d = 1.0;
  double e = 1.0;

  static ComparisonIndex make(IndexKind kind, double d = 1.0, double e = 1.0);

  /// Similarities live in [0, 1]; euclid is a distance.
  bool is_similarity() const noexcept { return kind != IndexKind::euclid; }

  /// Pairwise value. Not defined for euclid_complement, which needs the
  /// maximum distance over a whole set (see similarity_network).
  double evaluate(std::span<const double> x, std::span<const double> y) const;

  /// e.g. "coincidence(D=5,E=1)".
  std::string describe() const;
};

std::string_view index_name(IndexKind k) noexcept;
std::optional<IndexKind> parse_index(std::string_view name) noexcept;

}  // namespace propsim
