#include "rhombus/number_field.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <sstream>

namespace rhombus {

namespace {

const Rational& fine_width() {
  static const Rational w(Integer(1), Integer(1) << 160);
  return w;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

NumberField::NumberField(RationalPoly minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  RootInterval iv = refine_root(minpoly_, {lo_, hi_}, fine_width());
  fine_ = {iv.lo, iv.hi};
  approx_ = fine_.midpoint();
}

FieldPtr NumberField::create(const RationalPoly& minpoly, const Rational& lo, const Rational& hi) {
  if (minpoly.degree() < 1) throw Error(Errc::invalid_argument, "minimal polynomial must have degree >= 1");
  if (!(lo < hi)) throw Error(Errc::invalid_argument, "root interval must satisfy lo < hi");
  if (!is_squarefree(minpoly))
    throw Error(Errc::not_squarefree, "minimal polynomial " + minpoly.to_string() + " has a repeated factor");
  RationalPoly monic = minpoly.monic();
  if (monic(lo) == 0 || monic(hi) == 0)
    throw Error(Errc::root_count_not_one, "root interval endpoint is itself a root");
  const int count = sturm_count(monic, lo, hi);
  if (count != 1)
    throw Error(Errc::root_count_not_one,
                "interval (" + to_string(lo) + ", " + to_string(hi) + ") holds " + std::to_string(count) + " roots");
  return FieldPtr(new NumberField(std::move(monic), lo, hi));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = create(RationalPoly{0, 1}, -1, 1);
  return q;
}

FieldPtr NumberField::retarget(const Rational& lo, const Rational& hi) const {
  return create(minpoly_, lo, hi);
}

Interval NumberField::generator_enclosure(const Rational& width) const {
  if (fine_.width() <= width) return fine_;
  RootInterval iv = refine_root(minpoly_, {fine_.lo, fine_.hi}, width);
  return {iv.lo, iv.hi};
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (!(minpoly_ == other.minpoly_)) return false;
  // Both fine intervals isolate a root of the same squarefree polynomial, so
  // they overlap exactly when they isolate the same root.
  return !(fine_.hi < other.fine_.lo || other.fine_.hi < fine_.lo);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->degree() == 1 && a->minpoly() == RationalPoly({0, 1})) return b;
  if (b->degree() == 1 && b->minpoly() == RationalPoly({0, 1})) return a;
  if (a->same_as(*b)) return a;
  throw Error(Errc::field_mismatch,
              "operands live in Q[x]/(" + a->minpoly().to_string() + ") and Q[x]/(" + b->minpoly().to_string() + ")");
}

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(NumberField::rationals()) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field)
    : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const Rational& q) : AlgebraicNumber(std::move(field)) {
  coeffs_[0] = q;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  reduce();
}

AlgebraicNumber::AlgebraicNumber(long q) : AlgebraicNumber(NumberField::rationals(), Rational(q)) {}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
  if (field->degree() == 1) return AlgebraicNumber(field, -field->minpoly().coeff(0));
  AlgebraicNumber a(field);
  a.coeffs_[1] = 1;
  return a;
}

void AlgebraicNumber::reduce() {
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coeffs_.size() > d) {
    RationalPoly r = divmod(RationalPoly(coeffs_), field_->minpoly()).remainder;
    coeffs_ = r.coeffs();
  }
  for (auto& c : coeffs_) c.canonicalize();
  coeffs_.resize(d, Rational(0));
}

bool AlgebraicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool AlgebraicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "value " + to_string() + " is not rational");
  return coeffs_[0];
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  AlgebraicNumber r(f);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  AlgebraicNumber r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  FieldPtr f = common_field(a.field_, b.field_);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlgebraicNumber(f, std::move(prod));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (is_rational()) return AlgebraicNumber(field_, Rational(1 / coeffs_[0]));
  ExtendedGcd eg = extended_gcd(RationalPoly(coeffs_), field_->minpoly());
  if (eg.g.degree() != 0)
    throw Error(Errc::not_invertible, "gcd(" + RationalPoly(coeffs_).to_string() + ", " +
                                          field_->minpoly().to_string() + ") = " + eg.g.to_string() +
                                          " is nonconstant; the minimal polynomial is reducible");
  return AlgebraicNumber(field_, eg.s.coeffs());
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  common_field(a.field_, b.field_);
  return a.coeffs_ == b.coeffs_;
}

Interval AlgebraicNumber::enclosure(const Rational& width) const {
  if (is_rational()) return {coeffs_[0], coeffs_[0]};
  Rational alpha_width = fine_width();
  while (true) {
    Interval alpha = field_->generator_enclosure(alpha_width);
    Interval acc{coeffs_.back(), coeffs_.back()};
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * alpha + Interval{*it, *it};
    if (acc.width() <= width) return acc;
    alpha_width /= Integer(1) << 32;
  }
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  // A nonzero element has a nonzero embedding, so refinement terminates.
  Rational width(1, 1);
  while (true) {
    Interval iv = enclosure(width);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    width /= Integer(1) << 32;
  }
}

double AlgebraicNumber::to_double() const {
  if (is_rational()) return coeffs_[0].get_d();
  return enclosure(Rational(Integer(1), Integer(1) << 120)).midpoint();
}

std::string AlgebraicNumber::to_string(std::string_view generator_name) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rhombus::to_string(mag);
      continue;
    }
    if (mag != 1) os << rhombus::to_string(mag) << "*";
    os << generator_name;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Interval embed(const AlgebraicNumber& a, int digits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  return a.enclosure(Rational(Integer(1), den));
}

AlgebraicNumber abs(const AlgebraicNumber& a) { return a.sign() < 0 ? -a : a; }

}  // namespace rhombus
