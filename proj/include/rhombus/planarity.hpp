#pragma once

#include "rhombus/slope.hpp"
#include "rhombus/subperiods.hpp"
#include "rhombus/tiling.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace rhombus {

struct LiftCloud {
  std::size_t n = 0;
  std::vector<Eigen::VectorXd> points;
};

LiftCloud lift_cloud(const Patch& p);

struct SlopeFit {
  Grassmann slope;          // numeric, normalized
  double residual = 0.0;    // rms distance of the points to the fitted affine plane
  Eigen::MatrixXd basis;    // 2 x n, principal directions
  Eigen::VectorXd centroid;
};

/// Top-two principal directions of the centered cloud.
SlopeFit estimate_slope(const LiftCloud& c);

struct ThicknessReport {
  double t = 0.0;    // reported thickness
  double raw = 0.0;  // optimum of the tube program
  bool tiling = false;
  Eigen::VectorXd offset;  // optimal translate, in E-perp coordinates
  std::optional<Grassmann> fitted;
};

/// Smallest t with every point in E + c + [0,t]^n for some translate c.
/// Tiling lifts report max(1, raw): a tube thinner than the unit cube
/// cannot hold a tile.
ThicknessReport thickness(const LiftCloud& c, const SlopeSpec& s, bool tiling_lift = false);

/// Real functions used to bend a plane into S_{f,g}.
struct SurfaceFunction {
  enum class Kind { zero, linear, cubic, staircase };
  Kind kind = Kind::zero;
  double scale = 1.0;
  /// Staircase divisor K in floor(x^3 / K) - x; 0 picks the smallest K
  /// keeping steps of at most one level on the sampling grid.
  double divisor = 0.0;

  double operator()(double x) const;
  static SurfaceFunction parse(const std::string& name);
  std::string name() const;
};

struct LevitovSurface {
  LiftCloud cloud;
  Subperiod p1, p2;
  Eigen::VectorXd q1, q2;  // lifts in E
  Eigen::VectorXd r1, r2;  // lifts in E'
  SurfaceFunction f, g;
  double radius = 0.0;
  double step = 0.0;
};

/// Samples lambda q1 + mu q2 + f(lambda) r1 + g(mu) r2 on the grid
/// |lambda|, |mu| <= R. The two subperiods are the first pair of the slope
/// whose lifts in E are not collinear.
LevitovSurface levitov_surface(const SlopeSpec& e, const SlopeSpec& e_prime, SurfaceFunction f, SurfaceFunction g,
                               double radius, double step);

/// Whether two planes share a nonzero vector.
bool slopes_intersect(const SlopeSpec& a, const SlopeSpec& b);

/// Same coefficients with the generator sent to another real root of the
/// minimal polynomial; `root_index` counts the other real roots in
/// increasing order.
SlopeSpec conjugate_slope(const SlopeSpec& s, std::size_t root_index = 0);

struct PeriodicityCheck {
  std::size_t considered = 0;
  std::size_t matched = 0;     // y + p present
  std::size_t violations = 0;  // y + p absent while some y + kp, k >= 2, is present
  bool periodic = false;
};

/// Translation test of a cloud's shadow under an integer vector.
PeriodicityCheck check_shadow_period(const LiftCloud& c, const Triple& indices, const IntVector& p,
                                     double tol = 1e-7);

}  // namespace rhombus
