#pragma once

#include "rhombus/number_field.hpp"
#include "rhombus/polynomial.hpp"
#include "rhombus/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rhombus {

using Monomial = std::vector<unsigned>;  // one exponent per variable

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  std::vector<std::size_t> variables_used() const;

  /// Replaces variable k by q.
  MPoly substitute(std::size_t k, const MPoly& q) const;
  AlgebraicNumber evaluate(const std::vector<AlgebraicNumber>& values) const;
  double evaluate(const std::vector<double>& values) const;

  /// Divided by the coefficient of its largest monomial (graded order).
  MPoly normalized() const;
  /// The polynomial as univariate in variable k, if no other variable occurs.
  std::optional<RationalPoly> univariate(std::size_t k) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& c, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace rhombus
