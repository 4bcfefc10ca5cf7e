#pragma once

#include <Eigen/Dense>

namespace rhombus {

struct LpResult {
  bool feasible = false;
  bool bounded = false;
  Eigen::VectorXd x;
  double value = 0.0;
};

/// Dense two-phase simplex for  min c.x  subject to  A x <= b  with x free.
/// Meant for small problems (tens of variables, hundreds of rows); Bland's
/// rule prevents cycling.
LpResult minimize(const Eigen::VectorXd& c, const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace rhombus
