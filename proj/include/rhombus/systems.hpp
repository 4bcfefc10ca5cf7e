#pragma once

#include "rhombus/linear.hpp"
#include "rhombus/mpoly.hpp"
#include "rhombus/slope.hpp"
#include "rhombus/subperiods.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rhombus {

using Quad = std::array<std::size_t, 4>;  // 0-based, increasing

/// Every i<j<k<l, encoding G_ij G_kl = G_ik G_jl - G_il G_jk.
std::vector<Quad> plucker_relations(std::size_t n);

/// G_ij G_kl - G_ik G_jl + G_il G_jk in the n-choose-2 coordinate variables.
MPoly plucker_polynomial(std::size_t n, const Quad& q);

/// Coordinate names "G12" (or "G1,12" once indices exceed 9).
std::string coordinate_name(std::size_t n, std::size_t pair);

struct ReducedForm {
  std::size_t n = 0;
  Echelon<Rational> echelon;
  std::vector<std::size_t> free;  // free coordinates, lexicographic
  /// Every coordinate as a rational combination of the free ones.
  std::vector<std::vector<Rational>> expression;
};

/// Row reduction that prefers later coordinates as pivots, so eliminated
/// coordinates are expressed through earlier ones.
ReducedForm reduce(const LinearRelationSet& l);

enum class Dimension { empty, zero, one, unknown };
std::string to_string(Dimension d);

struct ReducedSystem {
  std::size_t n = 0;
  LinearRelationSet relations;
  ReducedForm form;
  std::size_t pivot = 0;                // coordinate set to 1
  std::vector<std::size_t> fixed_zero;  // free coordinates set to 0 in this chart
  std::vector<std::size_t> variables;   // remaining free coordinates
  std::vector<MPoly> residuals;         // one per Plücker relation, normalized
  std::vector<MPoly> distinct;          // nonzero residuals without repeats
  std::optional<RationalPoly> univariate;  // gcd of residuals when one variable is left
  Dimension dimension = Dimension::unknown;
  std::string note;
  std::vector<Grassmann> solutions;  // dimension zero only

  std::vector<std::string> variable_names() const;
};

/// Substitutes the reduced relations into all Plücker relations and
/// classifies the solution set. Charts normalize the free coordinates in
/// order (first = 1, earlier ones = 0); the reported chart is the first
/// with real points.
ReducedSystem classify(const LinearRelationSet& l);

/// The single chart where `pivot` (a free coordinate) is set to 1 and the
/// other free coordinates stay variable.
ReducedSystem classify_chart(const LinearRelationSet& l, std::size_t pivot);

/// classify() restricted to n = 4.
ReducedSystem classify_codim2(const LinearRelationSet& l);

/// Chebyshev polynomial of the second kind in X.
RationalPoly chebyshev_u(std::size_t i);

/// U_i from the alternating recurrence U_{2i} = 2Y U_{2i-1} - U_{2i-2},
/// U_{2i+1} = 2X U_{2i} - U_{2i-1}; variables (X, Y).
MPoly chebyshev_u_xy(std::size_t i);

struct NfoldIdentity {
  long i = 0, j = 0, k = 0, l = 0;  // 1-based, extended indices allowed
  Rational factor;                  // G_ij = factor * G_kl
  std::string to_string() const;
};

struct ChebyshevReport {
  std::size_t n = 0;
  std::size_t m = 0;
  int dimension = 0;
  bool product_form = false;  // 4 | n: polynomial in Z = XY
  Rational rhs;               // G_{1m} / G_12 under the extended convention
  RationalPoly polynomial;    // U_{m-2} - rhs in X, or in Z = XY
  MPoly u_xy;                 // U_{m-2} in (X, Y)
  std::string constraint;
  std::vector<NfoldIdentity> identities;
};

ChebyshevReport nfold_system(std::size_t n);

/// Sign s and reduced difference d with G_{i,i+delta} = s G_{1,1+d} under
/// the extended index convention, d in [0, m/2].
std::pair<int, long> nfold_reduce(std::size_t n, long delta);

/// Completes a Grassmann vector from its band G_{i,i+1} (n-1 values) and
/// G_{i,i+2} (n-2 values) through
/// G_ij = (G_{i,j-1} G_{i+1,j} - G_{i,i+1} G_{j-1,j}) / G_{i+1,j-1}.
Grassmann propagate_band(std::size_t n, const std::vector<AlgebraicNumber>& band);

struct LiftConstraint {
  std::vector<std::size_t> indices;  // 0-based coordinates of the projection
  SlopeSpec slope;                   // plane on those coordinates
};

struct Intersection {
  std::size_t dimension = 0;
  Matrix<AlgebraicNumber> basis;
};

/// Vectors of R^n whose projection onto each index set lies in the given plane.
Intersection intersect_lifted_slopes(std::size_t n, const std::vector<LiftConstraint>& constraints);

}  // namespace rhombus
