#include "propsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include "propsim/error.hpp"

namespace propsim {
namespace {

std::size_t pair_offset(std::size_t n, std::size_t i) { return i * n - i * (i + 1) / 2; }

// Fills weights[pair_offset(i) + (j - i - 1)] for rows i in [0, n). Each
// slot is written by exactly one worker, so the result is independent of
// the worker count.
template <typename PairFn>
void for_each_pair(std::size_t n, std::vector<Edge>& edges, PairFn&& fn) {
  edges.resize(n * (n - 1) / 2);
  auto run_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      const std::size_t base = pair_offset(n, i);
      for (std::size_t j = i + 1; j < n; ++j) edges[base + (j - i - 1)] = Edge{i, j, fn(i, j)};
    }
  };
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || n < 512) {
    run_rows(0, 1);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          run_rows(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

void WeightedGraph::validate() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.i >= e.j) throw Error(ErrorCode::validation, "edge endpoints must satisfy i < j");
    if (e.j >= n_nodes) throw Error(ErrorCode::validation, "edge endpoint out of range");
    if (!(e.w >= 0.0 && e.w <= 1.0))
      throw Error(ErrorCode::validation, "edge weight outside [0, 1]");
    if (!seen.emplace(e.i, e.j).second)
      throw Error(ErrorCode::validation, "duplicate edge");
  }
  if (node_labels && node_labels->size() != n_nodes)
    throw Error(ErrorCode::validation, "label count does not match node count");
}

WeightedGraph similarity_network(const FeatureMatrix& m, const ComparisonIndex& index) {
  const std::size_t n = m.rows();
  if (n < 2) throw Error(ErrorCode::degenerate_graph, "similarity network needs at least 2 rows");
  if (!index.is_similarity())
    throw Error(ErrorCode::domain, "similarity network needs a similarity index, got " +
                                       std::string(index_name(index.kind)));

  WeightedGraph g;
  g.n_nodes = n;
  g.node_labels = m.labels();
  g.index_descriptor = index.describe();

  auto pair_error = [](std::size_t i, std::size_t j, const Error& e) {
    return Error(e.code(), "pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " +
                               e.what());
  };

  if (index.kind == IndexKind::euclid_complement) {
    for_each_pair(n, g.edges, [&](std::size_t i, std::size_t j) {
      return euclidean(m.row(i), m.row(j));
    });
    double d_max = 0.0;
    for (const auto& e : g.edges) d_max = std::max(d_max, e.w);
    for (auto& e : g.edges) {
      // The farthest pair(s) land exactly on 0.
      e.w = d_max > 0.0 ? (e.w == d_max ? 0.0 : std::clamp(1.0 - e.w / d_max, 0.0, 1.0)) : 1.0;
    }
    return g;
  }

  for_each_pair(n, g.edges, [&](std::size_t i, std::size_t j) {
    try {
      return index.evaluate(m.row(i), m.row(j));
    } catch (const Error& e) {
      throw pair_error(i, j, e);
    }
  });
  return g;
}

WeightedGraph threshold_graph(const WeightedGraph& g, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw Error(ErrorCode::domain, "threshold must lie in [0, 1]");
  WeightedGraph out;
  out.n_nodes = g.n_nodes;
  out.node_labels = g.node_labels;
  out.index_descriptor = g.index_descriptor;
  std::copy_if(g.edges.begin(), g.edges.end(), std::back_inserter(out.edges),
               [tau](const Edge& e) { return e.w >= tau; });
  return out;
}

SeparationReport separation_report(const WeightedGraph& g) {
  if (!g.node_labels)
    throw Error(ErrorCode::labels_required, "separation report needs node labels");
  const auto& labels = *g.node_labels;
  if (std::set<std::string>(labels.begin(), labels.end()).size() < 2)
    throw Error(ErrorCode::labels_required, "separation report needs at least two categories");

  SeparationReport r;
  double within = 0.0, between = 0.0;
  for (const auto& e : g.edges) {
    if (labels[e.i] == labels[e.j]) {
      within += e.w;
      ++r.within_edges;
    } else {
      between += e.w;
      ++r.between_edges;
    }
  }
  r.within_mean = r.within_edges ? within / static_cast<double>(r.within_edges) : 0.0;
  r.between_mean = r.between_edges ? between / static_cast<double>(r.between_edges) : 0.0;
  r.gap = r.within_mean - r.between_mean;
  return r;
}

std::size_t ReceptiveFieldGrid::area() const noexcept {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

Point2 ReceptiveFieldGrid::sample_point(std::size_t ix, std::size_t iy) const {
  if (reference_cell && (*reference_cell)[0] == ix && (*reference_cell)[1] == iy)
    return reference;
  const double dx = (bounds.x_max - bounds.x_min) / static_cast<double>(resolution.nx);
  const double dy = (bounds.y_max - bounds.y_min) / static_cast<double>(resolution.ny);
  return {bounds.x_min + (static_cast<double>(ix) + 0.5) * dx,
          bounds.y_min + (static_cast<double>(iy) + 0.5) * dy};
}

ReceptiveFieldGrid receptive_field(const ComparisonIndex& index, Point2 reference,
                                   const Bounds& bounds, const Resolution& resolution,
                                   double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw Error(ErrorCode::domain, "threshold must lie in [0, 1]");
  if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min))
    throw Error(ErrorCode::domain, "bounds must have positive width and height");
  if (resolution.nx == 0 || resolution.ny == 0)
    throw Error(ErrorCode::domain, "resolution must be at least 1x1");
  if (!index.is_similarity() || index.kind == IndexKind::euclid_complement)
    throw Error(ErrorCode::domain, "receptive fields need a pairwise similarity index");

  ReceptiveFieldGrid grid;
  grid.bounds = bounds;
  grid.resolution = resolution;
  grid.reference = reference;
  grid.tau = tau;
  grid.index_descriptor = index.describe();
  grid.mask.assign(resolution.nx * resolution.ny, 0);

  const auto locate = [](double v, double lo, double hi, std::size_t n) {
    return std::min(static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(n)),
                    n - 1);
  };
  if (reference[0] >= bounds.x_min && reference[0] <= bounds.x_max &&
      reference[1] >= bounds.y_min && reference[1] <= bounds.y_max)
    grid.reference_cell = std::array<std::size_t, 2>{
        locate(reference[0], bounds.x_min, bounds.x_max, resolution.nx),
        locate(reference[1], bounds.y_min, bounds.y_max, resolution.ny)};

  for (std::size_t iy = 0; iy < resolution.ny; ++iy) {
    for (std::size_t ix = 0; ix < resolution.nx; ++ix) {
      const Point2 p = grid.sample_point(ix, iy);
      try {
        if (index.evaluate(reference, p) >= tau) grid.mask[iy * resolution.nx + ix] = 1;
      } catch (const Error&) {
        ++grid.undefined_cells;
      }
    }
  }
  return grid;
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  for (const auto& e : g.edges) out << e.i << '\t' << e.j << '\t' << format_double(e.w) << '\n';
}

void write_node_file(std::ostream& out, const WeightedGraph& g, std::span<const Point2> coords) {
  if (coords.size() != g.n_nodes)
    throw Error(ErrorCode::validation, "coordinate count does not match node count");
  for (std::size_t i = 0; i < g.n_nodes; ++i)
    out << i << '\t' << (g.node_labels ? (*g.node_labels)[i] : std::string("-")) << '\t'
        << format_double(coords[i][0]) << '\t' << format_double(coords[i][1]) << '\n';
}

void write_receptive_field(std::ostream& out, const ReceptiveFieldGrid& grid) {
  const auto& b = grid.bounds;
  out << "# index=" << grid.index_descriptor << " tau=" << format_double(grid.tau)
      << " bounds=" << format_double(b.x_min) << ',' << format_double(b.x_max) << ','
      << format_double(b.y_min) << ',' << format_double(b.y_max)
      << " resolution=" << grid.resolution.nx << 'x' << grid.resolution.ny
      << " reference=" << format_double(grid.reference[0]) << ','
      << format_double(grid.reference[1]) << " undefined_cells=" << grid.undefined_cells << '\n';
  for (std::size_t iy = 0; iy < grid.resolution.ny; ++iy) {
    for (std::size_t ix = 0; ix < grid.resolution.nx; ++ix)
      out << (ix ? "," : "") << (grid.at(ix, iy) ? '1' : '0');
    out << '\n';
  }
}

}  // namespace propsim
