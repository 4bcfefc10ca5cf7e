#include "rhombus/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace rhombus {

namespace {

constexpr double kEps = 1e-11;

// Tableau in equality form: rows 0..m-1 are constraints, row m is the
// objective (reduced costs, minimization), last column is the right-hand side.
struct Tableau {
  Eigen::MatrixXd t;
  std::vector<int> basis;
  int m = 0;
  int cols = 0;  // number of structural columns (excluding rhs)

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int r = 0; r <= m; ++r) {
      if (r == row) continue;
      const double f = t(r, col);
      if (f != 0.0) t.row(r) -= f * t.row(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Returns false when the objective is unbounded below.
  bool run(int allowed_cols) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < allowed_cols; ++c)
        if (t(m, c) < -kEps) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        if (t(r, enter) <= kEps) continue;
        const double ratio = t(r, cols) / t(r, enter);
        if (ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && leave >= 0 && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult minimize(const Eigen::VectorXd& c, const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(a.rows());
  // Columns: x+ (n), x- (n), slacks (m), artificials (m).
  const int structural = 2 * n + m;
  const int cols = structural + m;
  Tableau tab;
  tab.m = m;
  tab.cols = cols;
  tab.t = Eigen::MatrixXd::Zero(m + 1, cols + 1);
  tab.basis.assign(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    const double sign = b(r) < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) {
      tab.t(r, j) = sign * a(r, j);
      tab.t(r, n + j) = -sign * a(r, j);
    }
    tab.t(r, 2 * n + r) = sign;
    tab.t(r, structural + r) = 1.0;
    tab.t(r, cols) = sign * b(r);
    tab.basis[static_cast<std::size_t>(r)] = structural + r;
  }
  // Phase 1: minimize the sum of artificials.
  for (int r = 0; r < m; ++r) tab.t.row(m) -= tab.t.row(r);
  for (int r = 0; r < m; ++r) tab.t(m, structural + r) = 0.0;
  tab.run(structural);
  LpResult out;
  const double infeas = -tab.t(m, cols);
  if (infeas > 1e-8 * (1.0 + b.cwiseAbs().maxCoeff())) return out;
  out.feasible = true;
  // Drive remaining artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[static_cast<std::size_t>(r)] < structural) continue;
    for (int col = 0; col < structural; ++col)
      if (std::abs(tab.t(r, col)) > 1e-9) {
        tab.pivot(r, col);
        break;
      }
  }
  // Phase 2 objective in terms of the current basis.
  tab.t.row(m).setZero();
  for (int j = 0; j < n; ++j) {
    tab.t(m, j) = c(j);
    tab.t(m, n + j) = -c(j);
  }
  for (int r = 0; r < m; ++r) {
    const int bc = tab.basis[static_cast<std::size_t>(r)];
    const double f = tab.t(m, bc);
    if (f != 0.0) tab.t.row(m) -= f * tab.t.row(r);
  }
  if (!tab.run(structural)) return out;
  out.bounded = true;
  out.x = Eigen::VectorXd::Zero(n);
  for (int r = 0; r < m; ++r) {
    const int bc = tab.basis[static_cast<std::size_t>(r)];
    if (bc < n) out.x(bc) += tab.t(r, cols);
    else if (bc < 2 * n) out.x(bc - n) -= tab.t(r, cols);
  }
  out.value = c.dot(out.x);
  return out;
}

}  // namespace rhombus
