#include "rhombus/atlas.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rhombus {

PatternKey canonical(std::vector<Tile> tiles) {
  PatternKey key;
  if (tiles.empty()) return key;
  std::sort(tiles.begin(), tiles.end());
  const LatticePoint base = tiles.front().anchor;
  for (auto& t : tiles)
    for (std::size_t k = 0; k < base.size(); ++k) t.anchor[k] -= base[k];
  key.tiles = std::move(tiles);
  return key;
}

namespace {

std::array<Eigen::Vector2d, 4> corners(const std::vector<Eigen::Vector2d>& edges, const Tile& t) {
  const Eigen::Vector2d a = tiling_position(edges, t.anchor);
  return {a, a + edges[t.i], a + edges[t.i] + edges[t.j], a + edges[t.j]};
}

double segment_distance(const Eigen::Vector2d& p, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const Eigen::Vector2d d = b - a;
  const double len2 = d.squaredNorm();
  const double s = len2 > 0 ? std::clamp((p - a).dot(d) / len2, 0.0, 1.0) : 0.0;
  return (a + s * d - p).norm();
}

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a.x() * b.y() - a.y() * b.x(); }

// Distance from p to a convex quadrilateral, zero inside.
double polygon_distance(const Eigen::Vector2d& p, const std::array<Eigen::Vector2d, 4>& q) {
  int pos = 0, neg = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& a = q[k];
    const auto& b = q[(k + 1) % 4];
    const double c = cross(b - a, p - a);
    if (c > 0) ++pos;
    if (c < 0) ++neg;
    best = std::min(best, segment_distance(p, a, b));
  }
  return (pos == 0 || neg == 0) ? 0.0 : best;
}

}  // namespace

PatchGeometry::PatchGeometry(const Patch& p, std::vector<Eigen::Vector2d> edges) : patch_(&p) {
  if (edges.empty()) edges = build_projectors(p.slope).tile_vectors();
  if (edges.size() != p.n) throw Error(Errc::invalid_argument, "one edge vector per direction is required");
  edges_ = std::move(edges);
  positions_.reserve(p.vertices.size());
  for (const auto& x : p.vertices) positions_.push_back(position(x));

  // Full turn at a vertex means it is surrounded by tiles.
  std::vector<double> turn(p.vertices.size(), 0.0);
  const auto index_of = [&](const LatticePoint& x) {
    const auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), x);
    return static_cast<std::size_t>(it - p.vertices.begin());
  };
  for (const auto& t : p.tiles) {
    const double theta = std::acos(std::clamp(edges_[t.i].dot(edges_[t.j]), -1.0, 1.0));
    LatticePoint x = t.anchor;
    turn[index_of(x)] += theta;
    ++x[t.i];
    turn[index_of(x)] += std::numbers::pi - theta;
    ++x[t.j];
    turn[index_of(x)] += theta;
    --x[t.i];
    turn[index_of(x)] += std::numbers::pi - theta;
  }
  for (std::size_t k = 0; k < turn.size(); ++k)
    if (turn[k] < 2 * std::numbers::pi - 1e-6) boundary_.push_back(k);

  cell_ = 2.0;
  for (std::size_t k = 0; k < p.tiles.size(); ++k) {
    const auto q = corners(edges_, p.tiles[k]);
    tile_cells_[cell_of((q[0] + q[2]) / 2)].push_back(k);
  }
  for (auto k : boundary_) boundary_cells_[cell_of(positions_[k])].push_back(k);
}

PatchGeometry::Cell PatchGeometry::cell_of(const Eigen::Vector2d& y) const {
  return {static_cast<long>(std::floor(y.x() / cell_)), static_cast<long>(std::floor(y.y() / cell_))};
}

std::vector<Tile> PatchGeometry::r_map(const Eigen::Vector2d& center, double r) const {
  if (!(r > 0)) throw Error(Errc::invalid_argument, "r must be positive");
  // A tile centre lies within one edge length of every point of the tile.
  const double reach = r / 2 + 1.0;
  const long span = static_cast<long>(std::ceil(reach / cell_));
  const Cell c = cell_of(center);
  std::vector<Tile> out;
  for (long dx = -span; dx <= span; ++dx)
    for (long dy = -span; dy <= span; ++dy) {
      const auto it = tile_cells_.find({c.first + dx, c.second + dy});
      if (it == tile_cells_.end()) continue;
      for (auto k : it->second) {
        const Tile& t = patch_->tiles[k];
        if (polygon_distance(center, corners(edges_, t)) <= r / 2 + 1e-12) out.push_back(t);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> PatchGeometry::interior_centers(double r) const {
  const double clearance = r / 2 + 1.0;
  const long span = static_cast<long>(std::ceil(clearance / cell_));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (std::binary_search(boundary_.begin(), boundary_.end(), k)) continue;
    const Cell c = cell_of(positions_[k]);
    bool clear = true;
    for (long dx = -span; dx <= span && clear; ++dx)
      for (long dy = -span; dy <= span && clear; ++dy) {
        const auto it = boundary_cells_.find({c.first + dx, c.second + dy});
        if (it == boundary_cells_.end()) continue;
        for (auto b : it->second)
          if ((positions_[b] - positions_[k]).norm() <= clearance) {
            clear = false;
            break;
          }
      }
    if (clear) out.push_back(k);
  }
  return out;
}

Atlas r_atlas(const PatchGeometry& g, double r) {
  if (!(r > 0)) throw Error(Errc::invalid_argument, "r must be positive");
  const auto centers = g.interior_centers(r);
  if (centers.empty()) throw Error(Errc::patch_too_small, "no vertex lies a disk of diameter r inside the patch");
  Atlas a;
  a.r = r;
  for (auto k : centers) a.patterns.insert(canonical(g.r_map(g.position(g.patch().vertices[k]), r)));
  return a;
}

Atlas r_atlas(const Patch& p, double r) { return r_atlas(PatchGeometry(p), r); }

Containment atlas_contains(const Atlas& a, const Atlas& b) {
  if (std::abs(a.r - b.r) > 1e-12) throw Error(Errc::radius_mismatch, "atlases use different radii");
  Containment c;
  for (const auto& p : b.patterns)
    if (!a.patterns.count(p)) c.missing.push_back(p);
  c.contains = c.missing.empty();
  return c;
}

}  // namespace rhombus
