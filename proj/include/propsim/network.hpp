#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "propsim/core_stats.hpp"
#include "propsim/similarity.hpp"

namespace propsim {

struct Edge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double w = 0.0;
  bool operator==(const Edge&) const = default;
};

/// Undirected weighted graph stored as an edge list in lexicographic (i, j)
/// order. Similarity-derived weights lie in [0, 1].
struct WeightedGraph {
  std::size_t n_nodes = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<std::string>> node_labels;
  std::string index_descriptor;

  /// Throws Error(validation) on self-loops, duplicate pairs, i >= j,
  /// out-of-range nodes or weights outside [0, 1].
  void validate() const;
};

/// Complete graph with w_ij = index(row_i, row_j). For euclid-complement the
/// weight is 1 - d_ij / d_max (all weights 1 if every row coincides).
/// Throws Error(degenerate_graph) for fewer than two rows; index errors are
/// rethrown naming the failing pair.
WeightedGraph similarity_network(const FeatureMatrix& m, const ComparisonIndex& index);

/// Keeps edges with w >= tau; tau must lie in [0, 1].
WeightedGraph threshold_graph(const WeightedGraph& g, double tau);

using Point2 = std::array<double, 2>;

/// Force-directed (Fruchterman-Reingold) layout; edge weights scale the
/// attraction. Output is centred on the origin and fully determined by
/// (graph, seed, iterations).
std::vector<Point2> force_layout(const WeightedGraph& g, std::uint64_t seed,
                                 std::size_t iterations = 200);

struct SeparationReport {
  double within_mean = 0.0;
  double between_mean = 0.0;
  double gap = 0.0;
  std::size_t within_edges = 0;
  std::size_t between_edges = 0;
};

/// Mean edge weight within and across categories. Throws
/// Error(labels_required) without labels or with fewer than two categories.
SeparationReport separation_report(const WeightedGraph& g);

struct Bounds {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
};

struct Resolution {
  std::size_t nx = 0;
  std::size_t ny = 0;
};

/// Thresholded similarity map around a reference vector. Cell (ix, iy) is
/// sampled at its centre, except the cell containing the reference, which
/// is sampled at the reference itself. Row iy = 0 is at y_min.
struct ReceptiveFieldGrid {
  Bounds bounds;
  Resolution resolution;
  Point2 reference{};
  double tau = 0.7;
  std::string index_descriptor;
  std::vector<std::uint8_t> mask;  // ny rows of nx cells
  std::size_t undefined_cells = 0;
  std::optional<std::array<std::size_t, 2>> reference_cell;

  bool at(std::size_t ix, std::size_t iy) const { return mask[iy * resolution.nx + ix] != 0; }
  std::size_t area() const noexcept;
  Point2 sample_point(std::size_t ix, std::size_t iy) const;
};

/// Evaluates a similarity index between the reference and every grid cell.
/// Cells where the index is undefined are false and counted.
ReceptiveFieldGrid receptive_field(const ComparisonIndex& index, Point2 reference,
                                   const Bounds& bounds, const Resolution& resolution,
                                   double tau = 0.7);

// --- exports ----------------------------------------------------------------

/// "i<TAB>j<TAB>w" lines with zero-based indices.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
/// "i<TAB>label<TAB>x<TAB>y" lines; label is "-" for unlabelled graphs.
void write_node_file(std::ostream& out, const WeightedGraph& g, std::span<const Point2> coords);
/// Header line starting with '#', then ny lines of nx comma-separated 0/1.
void write_receptive_field(std::ostream& out, const ReceptiveFieldGrid& grid);

}  // namespace propsim
