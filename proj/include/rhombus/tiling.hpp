#pragma once

#include "rhombus/slope.hpp"

#include <Eigen/Dense>

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <vector>

namespace rhombus {

using LatticePoint = std::vector<long>;

/// Orthonormal bases of the slope E and of its complement.
struct ProjectionPair {
  std::size_t n = 0;
  Eigen::MatrixXd basis_e;     // 2 x n
  Eigen::MatrixXd basis_perp;  // (n-2) x n

  Eigen::Vector2d to_plane(const Eigen::VectorXd& x) const { return basis_e * x; }
  Eigen::VectorXd to_perp(const Eigen::VectorXd& x) const { return basis_perp * x; }

  /// Physical-plane edge vectors: pi_E(e_i) rescaled to unit length (left
  /// at zero when e_i is orthogonal to E).
  std::vector<Eigen::Vector2d> tile_vectors() const;
};

ProjectionPair build_projectors(const SlopeSpec& s);

Eigen::VectorXd to_eigen(const LatticePoint& x);

/// Half-space normal . y <= support, with a unit normal.
struct Facet {
  Eigen::VectorXd normal;
  double support = 0.0;
};

/// The projection of [0,1]^n onto E-perp, translated by `offset`.
struct Window {
  std::size_t dim = 0;
  std::vector<Eigen::VectorXd> generators;  // pi_perp(e_k)
  std::vector<Eigen::VectorXd> points;      // images of the cube vertices (n <= 16 only)
  std::vector<Facet> facets;                // of the untranslated window
  Eigen::VectorXd offset;

  Eigen::VectorXd center() const;
  /// Smallest facet slack at y; negative outside, zero on the boundary.
  double slack(const Eigen::VectorXd& y) const;
  bool contains(const Eigen::VectorXd& y, double tol = 0.0) const { return slack(y) >= -tol; }
};

/// Facets of the zonotope spanned by the generators.
std::vector<Facet> zonotope_facets(const std::vector<Eigen::VectorXd>& generators);

Window build_window(const ProjectionPair& pp, const Eigen::VectorXd& offset);

/// Pseudo-random window offset derived from a fixed seed.
Eigen::VectorXd default_offset(const ProjectionPair& pp, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr double kBoundaryTolerance = 1e-9;
inline constexpr double kPatchMargin = 1.0;

struct Tile {
  LatticePoint anchor;
  std::size_t i = 0;
  std::size_t j = 0;  // i < j, 0-based edge directions
  auto operator<=>(const Tile&) const = default;
};

struct Patch {
  std::size_t n = 0;
  SlopeSpec slope;
  Eigen::VectorXd offset;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::vector<LatticePoint> vertices;  // sorted
  std::vector<Tile> tiles;             // sorted
  std::vector<std::size_t> missing;    // pair indices of tile types that never occur
};

/// Canonical cut-and-project patch: x in Z^n is selected iff
/// pi_perp(x) - offset lies in the window; vertices within R + kPatchMargin
/// of the origin of E are kept and tiles are the unit faces with four
/// selected corners.
Patch generate_patch(const SlopeSpec& s, const Eigen::VectorXd& offset, double radius);
Patch generate_patch(const SlopeSpec& s, double radius, std::uint64_t seed = kDefaultSeed);

/// Physical-plane position of a lattice point with unit tile edges.
Eigen::Vector2d tiling_position(const std::vector<Eigen::Vector2d>& edges, const LatticePoint& x);

using Point3 = std::array<long, 3>;

/// Projection of a lift onto three coordinates.
struct Shadow {
  std::size_t n = 0;
  std::array<std::size_t, 3> indices{};
  std::set<Point3> points;
  std::vector<std::pair<Point3, std::array<std::size_t, 2>>> faces;  // anchor, local edge indices
  // Source samples: projected lattice point and pi_E position of each patch vertex.
  std::vector<std::pair<Point3, Eigen::Vector2d>> samples;
  Eigen::Matrix<double, 3, 2> plane_map;  // pi_E coordinates -> shadow coordinates
  double radius = 0.0;
};

Shadow shadow(const Patch& p, std::array<std::size_t, 3> indices);

/// Whether translating every interior vertex of the shadow by v lands on a
/// shadow vertex. Interior means farther from the patch rim than the lift
/// of v plus the tube slack.
bool empirical_period(const Shadow& sh, const Point3& v);

std::vector<double> empirical_frequencies(const Patch& p);

}  // namespace rhombus
