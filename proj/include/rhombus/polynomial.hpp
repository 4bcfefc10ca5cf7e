#pragma once

#include "rhombus/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhombus {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<long> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);
  static RationalPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;

  /// Multiplies through by the lcm of denominators and divides by the gcd of
  /// the resulting numerators; the leading coefficient is made positive.
  RationalPoly primitive() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& s, const RationalPoly& a);
  friend RationalPoly operator-(const RationalPoly& a);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

DivMod divmod(const RationalPoly& a, const RationalPoly& b);
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

struct ExtendedGcd {
  RationalPoly g;  // monic
  RationalPoly s;  // s*a + t*b = g
  RationalPoly t;
};
ExtendedGcd extended_gcd(const RationalPoly& a, const RationalPoly& b);

RationalPoly squarefree_part(const RationalPoly& p);
bool is_squarefree(const RationalPoly& p);

/// Rational roots via the rational-root theorem on the primitive integer form.
std::vector<Rational> rational_roots(const RationalPoly& p);

/// Sturm chain p, p', -rem(...), ...
std::vector<RationalPoly> sturm_chain(const RationalPoly& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_count(const std::vector<RationalPoly>& chain, const Rational& lo, const Rational& hi);
int sturm_count(const RationalPoly& p, const Rational& lo, const Rational& hi);

/// Cauchy bound: every complex root lies strictly inside (-B, B).
Rational root_bound(const RationalPoly& p);

struct RootInterval {
  Rational lo;
  Rational hi;
  double midpoint() const;
};

/// Isolating intervals for the distinct real roots of `p`, sorted ascending.
/// Each returned (lo, hi) holds exactly one root in its interior; endpoints
/// are never roots. With `range`, only roots inside the open range are kept.
std::vector<RootInterval> real_roots(const RationalPoly& p,
                                     const std::optional<std::pair<Rational, Rational>>& range = {});

/// Bisects an isolating interval of a squarefree polynomial until its width
/// is at most `width`.
RootInterval refine_root(const RationalPoly& squarefree, RootInterval iv, const Rational& width);

}  // namespace rhombus
