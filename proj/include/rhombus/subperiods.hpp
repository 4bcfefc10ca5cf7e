#pragma once

#include "rhombus/linear.hpp"
#include "rhombus/slope.hpp"

#include <array>
#include <string>
#include <vector>

namespace rhombus {

using Triple = std::array<std::size_t, 3>;  // 0-based, increasing

struct Subperiod {
  Triple indices{};
  IntVector vector;  // primitive (p, q, r)
};

/// Periods of one shadow: a Z-basis of its subperiod lattice.
struct ShadowPeriods {
  Triple indices{};
  std::vector<Subperiod> periods;
  std::size_t count() const { return periods.size(); }
  /// Count 3 happens only when G_ij = G_ik = G_jk = 0.
  bool degenerate() const { return periods.size() == 3; }
};

/// All shadows i<j<k with the integer solutions of
/// p G_jk - q G_ik + r G_ij = 0, computed exactly.
std::vector<ShadowPeriods> subperiods(const SlopeSpec& s);

/// Subperiods of every shadow, flattened.
std::vector<Subperiod> all_subperiods(const std::vector<ShadowPeriods>& shadows);

/// Heuristic for numeric slopes: integer vectors with entries bounded by
/// `bound` whose relation residual is below `tol` relative to max|G|.
/// Not exact; reported periods may be spurious or missing.
std::vector<ShadowPeriods> subperiods_numeric(const SlopeSpec& s, int bound = 6, double tol = 1e-9);

struct SubperiodLift {
  Subperiod subperiod;
  std::vector<AlgebraicNumber> vector;  // in E
  AlgebraicNumber lambda;               // vector = lambda u + mu v
  AlgebraicNumber mu;
  AlgebraicNumber norm_squared;
  double norm() const;
  std::vector<double> numeric() const;
};

SubperiodLift lift_subperiod(const SlopeSpec& s, const Subperiod& sp);

struct LevitovVerdict {
  bool holds = false;
  std::string reason;
  std::vector<SubperiodLift> witness;  // three pairwise non-collinear lifts when holds
  std::vector<ShadowPeriods> shadows;
};

/// Three subperiods, each alone in its shadow, lifting to pairwise
/// non-collinear vectors of the slope.
LevitovVerdict levitov_condition(const SlopeSpec& s);

/// Whether the plane contains a nonzero rational vector.
bool has_rational_line(const SlopeSpec& s);

struct LinearRelationSet {
  std::size_t n = 0;
  Matrix<Rational> rows;  // each of length n choose 2
};

LinearRelationSet subperiod_relations(const std::vector<Subperiod>& sps, std::size_t n);

/// "G12 = G23" style rendering of one relation row.
std::string relation_to_string(const std::vector<Rational>& row, std::size_t n);

}  // namespace rhombus
