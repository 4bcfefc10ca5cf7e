#pragma once

#include "rhombus/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rhombus {

/// Closed interval with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  double midpoint() const { return Rational((lo + hi) / 2).get_d(); }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(alpha) for a real root alpha of a squarefree rational polynomial,
/// singled out by an isolating interval.
class NumberField {
 public:
  /// Validates squarefreeness and that (lo, hi) holds exactly one real root.
  static FieldPtr create(const RationalPoly& minpoly, const Rational& lo, const Rational& hi);

  /// Q itself, presented as Q(alpha) with alpha = 0 the root of x.
  static FieldPtr rationals();

  /// Same minimal polynomial, embedding sent to the root isolated by (lo, hi).
  FieldPtr retarget(const Rational& lo, const Rational& hi) const;

  const RationalPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  const Rational& interval_lo() const { return lo_; }
  const Rational& interval_hi() const { return hi_; }

  /// Enclosure of alpha of width at most `width`.
  Interval generator_enclosure(const Rational& width) const;
  double generator_value() const { return approx_; }

  /// Same polynomial and same embedded root.
  bool same_as(const NumberField& other) const;

 private:
  NumberField(RationalPoly minpoly, Rational lo, Rational hi);

  RationalPoly minpoly_;
  Rational lo_;
  Rational hi_;
  Interval fine_;
  double approx_ = 0.0;
};

/// Element c0 + c1*alpha + ... of a number field, kept reduced modulo the
/// minimal polynomial. A value in `NumberField::rationals()` mixes freely
/// with values of any other field.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  explicit AlgebraicNumber(FieldPtr field);
  AlgebraicNumber(FieldPtr field, const Rational& q);
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs);
  AlgebraicNumber(long q);  // NOLINT: rational constants read naturally in formulas

  static AlgebraicNumber generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  AlgebraicNumber inverse() const;
  int sign() const;
  double to_double() const;

  /// Enclosure of the embedded value of width at most `width`.
  Interval enclosure(const Rational& width) const;

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  AlgebraicNumber& operator+=(const AlgebraicNumber& b) { return *this = *this + b; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& b) { return *this = *this - b; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& b) { return *this = *this * b; }

  /// Human-readable power-basis form, e.g. "1/2 + 3*a".
  std::string to_string(std::string_view generator_name = "a") const;

 private:
  void reduce();

  FieldPtr field_;
  std::vector<Rational> coeffs_;  // exactly field_->degree() entries
};

/// Rational interval containing the embedded value, width <= 10^-digits.
Interval embed(const AlgebraicNumber& a, int digits);

AlgebraicNumber abs(const AlgebraicNumber& a);

/// Common field of two operands (either may be Q); throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace rhombus
