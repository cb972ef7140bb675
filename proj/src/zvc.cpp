#include "chermnykh/zvc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "chermnykh/errors.hpp"
#include "chermnykh/parallel.hpp"
#include "chermnykh/roots.hpp"

namespace chermnykh {

ZvGrid sample_grid(const Model& model, const Window& window, int nx, int ny, double mask_radius) {
  if (!(window.x_max > window.x_min && window.y_max > window.y_min)) {
    throw ModelError("zvc window has zero area");
  }
  if (nx < 2 || ny < 2) throw ModelError("zvc grid needs at least 2 nodes per axis");
  ZvGrid g;
  g.window = window;
  g.nx = nx;
  g.ny = ny;
  const std::size_t count = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  g.values.assign(count, std::numeric_limits<double>::quiet_NaN());
  g.mask.assign(count, 0);
  const double mu = model.mu();
  parallel_for(static_cast<std::size_t>(ny), [&](std::size_t row) {
    const int j = static_cast<int>(row);
    const double y = g.y(j);
    for (int i = 0; i < nx; ++i) {
      const double x = g.x(i);
      const std::size_t k = row * nx + i;
      const bool near = std::hypot(x + mu, y) < mask_radius ||
                        std::hypot(x + mu - 1.0, y) < mask_radius ||
                        (model.has_disk() && std::hypot(x, y) < mask_radius);
      if (near) {
        g.mask[k] = 1;
      } else {
        g.values[k] = 2.0 * model.omega({x, y});
      }
    }
  });
  return g;
}

std::size_t ContourSet::vertex_count() const {
  std::size_t n = 0;
  for (const auto& line : polylines) n += line.size();
  return n;
}

namespace {

// Edge ids: horizontal edge from node (i, j) to (i + 1, j) is 2k, vertical edge
// from (i, j) to (i, j + 1) is 2k + 1, with k = j * nx + i.
struct EdgeGraph {
  std::map<long, Point2> point;
  std::map<long, std::array<long, 2>> link;

  void add(long a, long b) {
    attach(a, b);
    attach(b, a);
  }
  void attach(long from, long to) {
    auto [it, fresh] = link.try_emplace(from, std::array<long, 2>{-1, -1});
    (void)fresh;
    auto& slot = it->second;
    if (slot[0] < 0) {
      slot[0] = to;
    } else {
      slot[1] = to;
    }
  }
};

}  // namespace

ContourSet extract_contours(const ZvGrid& grid, double level, const Model* model) {
  ContourSet out;
  out.level = level;
  const int nx = grid.nx;
  const int ny = grid.ny;
  EdgeGraph graph;

  auto node = [&](int i, int j) { return static_cast<long>(j) * nx + i; };
  auto crossing = [&](double v0, double v1, Point2 p0, Point2 p1) {
    auto at = [&](double t) { return Point2{p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)}; };
    const double linear = (level - v0) / (v1 - v0);
    if (!model) return at(linear);
    // Polish the crossing on the edge itself; curvature near the centres makes
    // the linear estimate poor at coarse spacing.
    try {
      auto g = [&](double t) {
        if (t <= 0.0) return v0 - level;
        if (t >= 1.0) return v1 - level;
        return 2.0 * model->omega(at(t)) - level;
      };
      return at(roots::polish(g, 0.0, 1.0, 1e-13 * std::abs(level)));
    } catch (const std::exception&) {
      return at(linear);
    }
  };

  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      if (grid.masked(i, j) || grid.masked(i + 1, j) || grid.masked(i + 1, j + 1) ||
          grid.masked(i, j + 1)) {
        continue;
      }
      const double v00 = grid.at(i, j);
      const double v10 = grid.at(i + 1, j);
      const double v11 = grid.at(i + 1, j + 1);
      const double v01 = grid.at(i, j + 1);
      const int code = (v00 >= level) | (v10 >= level) << 1 | (v11 >= level) << 2 |
                       (v01 >= level) << 3;
      if (code == 0 || code == 15) continue;

      const Point2 p00{grid.x(i), grid.y(j)};
      const Point2 p10{grid.x(i + 1), grid.y(j)};
      const Point2 p11{grid.x(i + 1), grid.y(j + 1)};
      const Point2 p01{grid.x(i), grid.y(j + 1)};
      const long bottom = 2 * node(i, j);
      const long top = 2 * node(i, j + 1);
      const long left = 2 * node(i, j) + 1;
      const long right = 2 * node(i + 1, j) + 1;

      auto ensure = [&](long edge) {
        if (graph.point.count(edge)) return;
        if (edge == bottom) graph.point[edge] = crossing(v00, v10, p00, p10);
        if (edge == top) graph.point[edge] = crossing(v01, v11, p01, p11);
        if (edge == left) graph.point[edge] = crossing(v00, v01, p00, p01);
        if (edge == right) graph.point[edge] = crossing(v10, v11, p10, p11);
      };
      auto segment = [&](long a, long b) {
        ensure(a);
        ensure(b);
        graph.add(a, b);
      };

      switch (code) {
        case 1: case 14: segment(left, bottom); break;
        case 2: case 13: segment(bottom, right); break;
        case 3: case 12: segment(left, right); break;
        case 4: case 11: segment(right, top); break;
        case 6: case 9: segment(bottom, top); break;
        case 7: case 8: segment(left, top); break;
        case 5:
        case 10: {
          const Point2 c{0.5 * (p00.x + p11.x), 0.5 * (p00.y + p11.y)};
          const double vc = model ? 2.0 * model->omega(c) : 0.25 * (v00 + v10 + v11 + v01);
          // Centre on the side of corner 00 joins 00 with 11 when code is 5.
          const bool join_00_11 = (code == 5) == (vc >= level);
          if (join_00_11) {
            segment(bottom, right);
            segment(left, top);
          } else {
            segment(left, bottom);
            segment(right, top);
          }
          break;
        }
        default: break;
      }
    }
  }

  std::map<long, bool> used;
  auto walk = [&](long start) {
    std::vector<Point2> line{graph.point.at(start)};
    used[start] = true;
    long prev = -1;
    long cur = start;
    while (true) {
      const auto& nb = graph.link.at(cur);
      long next = (nb[0] != prev) ? nb[0] : nb[1];
      if (nb[0] == nb[1]) next = (prev < 0) ? nb[0] : -1;
      if (next < 0) break;
      line.push_back(graph.point.at(next));
      if (next == start || used[next]) break;
      used[next] = true;
      prev = cur;
      cur = next;
    }
    out.polylines.push_back(std::move(line));
  };
  // Open chains first (endpoints have one neighbour), then closed loops.
  for (const auto& [edge, nb] : graph.link) {
    if (!used[edge] && nb[1] < 0) walk(edge);
  }
  for (const auto& [edge, nb] : graph.link) {
    (void)nb;
    if (!used[edge]) walk(edge);
  }
  return out;
}

int count_components(const ZvGrid& grid, double level, Region region) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  auto inside = [&](int i, int j) {
    const bool allowed = grid.masked(i, j) || grid.at(i, j) >= level;
    return region == Region::Allowed ? allowed : !allowed;
  };
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(nx) * ny, 0);
  std::vector<std::pair<int, int>> stack;
  int components = 0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      if (seen[k] || !inside(i, j)) continue;
      ++components;
      seen[k] = 1;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        const std::array<std::pair<int, int>, 4> nbs{
            {{ci + 1, cj}, {ci - 1, cj}, {ci, cj + 1}, {ci, cj - 1}}};
        for (const auto& [ni, nj] : nbs) {
          if (ni < 0 || nj < 0 || ni >= nx || nj >= ny) continue;
          const std::size_t nk = static_cast<std::size_t>(nj) * nx + ni;
          if (seen[nk] || !inside(ni, nj)) continue;
          seen[nk] = 1;
          stack.push_back({ni, nj});
        }
      }
    }
  }
  return components;
}

double potential_only(const Model& model, Point2 p) {
  return model.omega(p) - 0.5 * model.n2() * (p.x * p.x + p.y * p.y);
}

namespace {

/// Radius along a ray where f(rho) = level, nearest to guess; NaN if none in
/// [guess / 2, 2 guess].
template <typename F>
double ray_root(F&& f, double level, double guess) {
  auto g = [&](double rho) { return f(rho) - level; };
  const double lo = 0.5 * guess;
  const double hi = 2.0 * guess;
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& br : roots::scan_sign_changes(g, lo, hi, (hi - lo) / 400.0)) {
    const double r = roots::polish(g, br.lo, br.hi, 0.0);
    if (std::isnan(best) || std::abs(r - guess) < std::abs(best - guess)) best = r;
  }
  return best;
}

}  // namespace

LimitReport limit_diagnostics(const Model& model, const std::vector<double>& far_radii,
                              const std::vector<double>& near_radii, int directions) {
  LimitReport rep;
  const double mu = model.mu();
  std::vector<double> angles;
  for (int k = 0; k < directions; ++k) {
    angles.push_back((k + 0.5) * 2.0 * std::numbers::pi / directions);
  }

  for (double big_r : far_radii) {
    LimitSample s;
    s.radius = big_r;
    s.level = model.n2() * big_r * big_r;
    for (double th : angles) {
      auto f = [&](double rho) {
        return 2.0 * model.omega({rho * std::cos(th), rho * std::sin(th)});
      };
      const double rho = ray_root(f, s.level, big_r);
      if (!std::isnan(rho)) s.defect = std::max(s.defect, std::abs(rho - big_r) / big_r);
    }
    rep.far_field.push_back(s);
  }

  for (double dist : near_radii) {
    LimitSample s;
    s.radius = dist;
    s.level = 2.0 * model.omega({-mu + dist, 0.0});
    for (double th : angles) {
      const double cx = std::cos(th);
      const double sy = std::sin(th);
      auto full = [&](double rho) { return 2.0 * model.omega({-mu + rho * cx, rho * sy}); };
      auto pot = [&](double rho) { return 2.0 * potential_only(model, {-mu + rho * cx, rho * sy}); };
      const double r_full = ray_root(full, s.level, dist);
      const double r_pot = ray_root(pot, s.level, dist);
      if (!std::isnan(r_full) && !std::isnan(r_pot)) {
        s.defect = std::max(s.defect, std::abs(r_full - r_pot) / dist);
      }
    }
    rep.near_field.push_back(s);
  }
  return rep;
}

}  // namespace chermnykh
