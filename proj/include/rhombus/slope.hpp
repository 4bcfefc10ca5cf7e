#pragma once

#include "rhombus/number_field.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rhombus {

enum class Mode { exact, numeric };

/// A 2-plane of R^n given by two generating vectors. In exact mode the
/// entries live in a number field and `u_num`/`v_num` hold their embeddings;
/// in numeric mode only the floating vectors are present.
struct SlopeSpec {
  std::size_t n = 0;
  Mode mode = Mode::numeric;
  FieldPtr field;
  std::vector<AlgebraicNumber> u;
  std::vector<AlgebraicNumber> v;
  std::vector<double> u_num;
  std::vector<double> v_num;

  static SlopeSpec exact(FieldPtr field, std::vector<AlgebraicNumber> u, std::vector<AlgebraicNumber> v);
  static SlopeSpec numeric(std::vector<double> u, std::vector<double> v);

  bool is_exact() const { return mode == Mode::exact; }

  /// The plane projected onto the listed coordinates (0-based, in order).
  SlopeSpec restrict_to(const std::vector<std::size_t>& indices) const;
};

/// Lexicographic position of the pair (i, j), i < j, among the n-choose-2.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }
std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n);

/// Grassmann (Plücker) coordinates G_ij, i < j, in lexicographic order.
struct Grassmann {
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<AlgebraicNumber> exact;  // empty in numeric mode

  static Grassmann from_exact(std::size_t n, std::vector<AlgebraicNumber> coords);
  static Grassmann from_numeric(std::size_t n, std::vector<double> coords);

  bool is_exact() const { return !exact.empty(); }

  /// Signed access with G_ji = -G_ij and G_ii = 0 (0-based indices).
  double at(std::size_t i, std::size_t j) const;
  AlgebraicNumber exact_at(std::size_t i, std::size_t j) const;

  /// Divides by the first nonzero coordinate.
  Grassmann normalized() const;

  /// "G12,G13,..." labels with 1-based indices, matching `values`.
  std::vector<std::string> legend() const;
};

Grassmann grassmann(const SlopeSpec& s);

struct PluckerViolation {
  std::array<std::size_t, 4> quad;  // i < j < k < l, 0-based
  double residual = 0.0;
};

/// Default numeric tolerance for Plücker residuals, relative to max|G|^2.
inline constexpr double kPluckerTolerance = 1e-9;

/// Quadruples where G_ij G_kl != G_ik G_jl - G_il G_jk. Exact coordinates are
/// tested exactly; numeric ones against `rel_tol * max|G|^2`.
std::vector<PluckerViolation> plucker_check(const Grassmann& g, double rel_tol = kPluckerTolerance);

struct Frequencies {
  std::vector<double> values;
  std::vector<AlgebraicNumber> exact;    // exact mode only
  std::vector<std::size_t> degenerate;   // pair indices of absent tiles
};

/// Tile frequencies |G_ij| / sum |G_kl|.
Frequencies frequencies(const Grassmann& g);

struct NfoldSlope {
  std::size_t n = 0;
  std::size_t m = 0;  // dimension of the lift space
  SlopeSpec slope;
  Grassmann coords;
  std::vector<std::size_t> degenerate;  // pair indices with G_ij ~ 0
};

/// Slope generated by (cos 2k pi/n)_k and (sin 2k pi/n)_k, k < m with m = n
/// (n odd) or n/2 (n even). `full_star` keeps all n directions for even n,
/// which makes opposite directions collinear and flags the zero coordinates.
NfoldSlope nfold_slope(std::size_t n, bool full_star = false);

namespace presets {

FieldPtr golden_field();   // x^2 - x - 1, root in (1, 2)
FieldPtr sqrt2_field();    // x^2 - 2, root in (1, 2)
FieldPtr cubic_field();    // x^3 - x^2 - 2x + 1, root in (1, 2)

/// Plane of (-1, 0, phi, phi) and (0, 1, phi, 1).
SlopeSpec golden_octagonal();
/// Plane of (cos k pi/4)_k and (sin k pi/4)_k, k = 0..3.
SlopeSpec ammann_beenker();
/// Plane of (phi, 0, -phi, -1, 1) and (-1, 1, phi, 0, -phi).
SlopeSpec penrose();
/// Plane of (-1, 0, 1, a, b, b) and (0, 1, a, b, b, a), b = a^2 - 1.
SlopeSpec cubic_dodecagonal();

/// (1, t, 1, 1, 2/t, 1) for t in the given field.
Grassmann ammann_beenker_family(const AlgebraicNumber& t);

/// Looks up a preset by name: golden, ammann-beenker, penrose, cubic.
SlopeSpec by_name(const std::string& name);

}  // namespace presets

}  // namespace rhombus
