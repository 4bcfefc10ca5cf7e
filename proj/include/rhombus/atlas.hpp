#pragma once

#include "rhombus/tiling.hpp"

#include <Eigen/Dense>

#include <map>
#include <set>
#include <vector>

namespace rhombus {

/// Tiles translated so the smallest anchor is the origin, sorted.
struct PatternKey {
  std::vector<Tile> tiles;
  auto operator<=>(const PatternKey&) const = default;
};

PatternKey canonical(std::vector<Tile> tiles);

struct Atlas {
  double r = 0.0;
  std::set<PatternKey> patterns;
};

/// Tile polygons of a patch in the tiling plane, with a bucket grid for
/// disk queries.
class PatchGeometry {
 public:
  explicit PatchGeometry(const Patch& p, std::vector<Eigen::Vector2d> edges = {});

  const Patch& patch() const { return *patch_; }
  const std::vector<Eigen::Vector2d>& edges() const { return edges_; }
  Eigen::Vector2d position(const LatticePoint& x) const { return tiling_position(edges_, x); }

  /// Tiles meeting the closed disk of diameter r around `center`.
  std::vector<Tile> r_map(const Eigen::Vector2d& center, double r) const;

  /// Vertices where the incident tile angles fall short of a full turn.
  const std::vector<std::size_t>& boundary() const { return boundary_; }

  /// Vertices whose disk of diameter r stays clear of the patch rim.
  std::vector<std::size_t> interior_centers(double r) const;

 private:
  using Cell = std::pair<long, long>;
  Cell cell_of(const Eigen::Vector2d& y) const;

  const Patch* patch_;
  std::vector<Eigen::Vector2d> edges_;
  std::vector<Eigen::Vector2d> positions_;  // per vertex
  std::vector<std::size_t> boundary_;
  double cell_ = 1.0;
  std::map<Cell, std::vector<std::size_t>> tile_cells_;     // by tile centre
  std::map<Cell, std::vector<std::size_t>> boundary_cells_;  // by vertex
};

/// Canonical patterns of every r-map centred at an interior vertex.
Atlas r_atlas(const PatchGeometry& g, double r);
Atlas r_atlas(const Patch& p, double r);

struct Containment {
  bool contains = true;
  std::vector<PatternKey> missing;  // patterns of B absent from A
};

Containment atlas_contains(const Atlas& a, const Atlas& b);

}  // namespace rhombus
