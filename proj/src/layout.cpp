// Fruchterman-Reingold force-directed placement.

#include <cmath>
#include <random>

#include "propsim/network.hpp"

namespace propsim {

std::vector<Point2> force_layout(const WeightedGraph& g, std::uint64_t seed,
                                 std::size_t iterations) {
  const std::size_t n = g.n_nodes;
  std::vector<Point2> pos(n, Point2{0.0, 0.0});
  if (n <= 1) return pos;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> init(-1.0, 1.0);
  for (auto& p : pos) p = {init(rng), init(rng)};

  // Frame [-1, 1]^2, so area 4; k is the ideal pairwise distance.
  const double k = std::sqrt(4.0 / static_cast<double>(n));
  const double k2 = k * k;
  const double t0 = 0.2;
  constexpr double kMinDist = 1e-9;

  std::vector<Point2> disp(n);
  for (std::size_t it = 0; it < iterations; ++it) {
    std::fill(disp.begin(), disp.end(), Point2{0.0, 0.0});

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pos[i][0] - pos[j][0];
        const double dy = pos[i][1] - pos[j][1];
        const double d = std::max(std::hypot(dx, dy), kMinDist);
        const double f = k2 / (d * d);  // (k^2 / d) along the unit vector
        disp[i][0] += dx * f;
        disp[i][1] += dy * f;
        disp[j][0] -= dx * f;
        disp[j][1] -= dy * f;
      }
    }
    for (const auto& e : g.edges) {
      const double dx = pos[e.i][0] - pos[e.j][0];
      const double dy = pos[e.i][1] - pos[e.j][1];
      const double d = std::hypot(dx, dy);
      const double f = e.w * d / k;  // (w d^2 / k) along the unit vector
      disp[e.i][0] -= dx * f;
      disp[e.i][1] -= dy * f;
      disp[e.j][0] += dx * f;
      disp[e.j][1] += dy * f;
    }

    const double temperature =
        t0 * (1.0 - static_cast<double>(it) / static_cast<double>(iterations));
    for (std::size_t i = 0; i < n; ++i) {
      const double len = std::hypot(disp[i][0], disp[i][1]);
      if (len < kMinDist) continue;
      const double step = std::min(len, temperature) / len;
      pos[i][0] += disp[i][0] * step;
      pos[i][1] += disp[i][1] * step;
    }
  }

  Point2 centre{0.0, 0.0};
  for (const auto& p : pos) {
    centre[0] += p[0];
    centre[1] += p[1];
  }
  centre[0] /= static_cast<double>(n);
  centre[1] /= static_cast<double>(n);
  for (auto& p : pos) {
    p[0] -= centre[0];
    p[1] -= centre[1];
  }
  return pos;
}

}  // namespace propsim
