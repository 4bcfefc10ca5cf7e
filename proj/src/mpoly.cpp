#include "rhombus/mpoly.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rhombus {

namespace {

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

// Graded order: total degree first, then lexicographic.
bool graded_less(const Monomial& a, const Monomial& b) {
  const unsigned da = degree_of(a), db = degree_of(b);
  return da != db ? da < db : a < b;
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw Error(Errc::invalid_argument, "variable index out of range");
  MPoly p(nvars);
  Monomial m(nvars, 0);
  m[k] = 1;
  p.add_term(m, 1);
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

std::vector<std::size_t> MPoly::variables_used() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nvars_; ++k)
    for (const auto& [m, c] : terms_)
      if (m[k] > 0) {
        out.push_back(k);
        break;
      }
  return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (std::size_t k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  return out;
}

MPoly operator*(const Rational& c, const MPoly& a) { return MPoly::constant(a.nvars_, c) * a; }

MPoly MPoly::substitute(std::size_t k, const MPoly& q) const {
  MPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[k] = 0;
    MPoly term(nvars_);
    term.add_term(rest, c);
    for (unsigned e = 0; e < m[k]; ++e) term = term * q;
    out = out + term;
  }
  return out;
}

AlgebraicNumber MPoly::evaluate(const std::vector<AlgebraicNumber>& values) const {
  AlgebraicNumber acc;
  for (const auto& [m, c] : terms_) {
    AlgebraicNumber t(NumberField::rationals(), c);
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= values[k];
    acc += t;
  }
  return acc;
}

double MPoly::evaluate(const std::vector<double>& values) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t k = 0; k < nvars_; ++k)
      for (unsigned e = 0; e < m[k]; ++e) t *= values[k];
    acc += t;
  }
  return acc;
}

MPoly MPoly::normalized() const {
  if (terms_.empty()) return *this;
  auto lead = std::max_element(terms_.begin(), terms_.end(),
                               [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  return Rational(1 / lead->second) * *this;
}

std::optional<RationalPoly> MPoly::univariate(std::size_t k) const {
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v)
      if (v != k && m[v] > 0) return std::nullopt;
    if (coeffs.size() <= m[k]) coeffs.resize(m[k] + 1);
    coeffs[m[k]] = c;
  }
  return RationalPoly(coeffs);
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    const bool unit = degree_of(m) > 0 && mag == 1;
    if (!unit) os << rhombus::to_string(mag);
    bool need_star = !unit;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << "*";
      os << names[k];
      if (m[k] > 1) os << "^" << m[k];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace rhombus
