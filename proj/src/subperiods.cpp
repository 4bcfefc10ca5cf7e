#include "rhombus/subperiods.hpp"

#include "rhombus/error.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace rhombus {

namespace {

std::vector<Triple> triples(std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

// Expands a linear form with algebraic coefficients into one rational row
// per power-basis coordinate.
Matrix<Rational> expand_rows(const std::vector<AlgebraicNumber>& coeffs) {
  FieldPtr field = NumberField::rationals();
  for (const auto& c : coeffs) field = common_field(field, c.field());
  Matrix<Rational> rows(static_cast<std::size_t>(field->degree()), std::vector<Rational>(coeffs.size()));
  for (std::size_t col = 0; col < coeffs.size(); ++col) {
    const AlgebraicNumber c = coeffs[col] + AlgebraicNumber(field);
    for (std::size_t t = 0; t < rows.size(); ++t) rows[t][col] = c.coeffs()[t];
  }
  return rows;
}

AlgebraicNumber det2(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c,
                     const AlgebraicNumber& d) {
  return a * d - b * c;
}

}  // namespace

std::vector<ShadowPeriods> subperiods(const SlopeSpec& s) {
  if (!s.is_exact()) throw Error(Errc::invalid_argument, "exact subperiods need an exact slope");
  const Grassmann g = grassmann(s);
  std::vector<ShadowPeriods> out;
  for (const auto& t : triples(s.n)) {
    auto [i, j, k] = t;
    const Matrix<Rational> m = expand_rows({g.exact_at(j, k), -g.exact_at(i, k), g.exact_at(i, j)});
    ShadowPeriods sp;
    sp.indices = t;
    for (auto& v : integer_kernel(m, 3)) sp.periods.push_back({t, std::move(v)});
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<Subperiod> all_subperiods(const std::vector<ShadowPeriods>& shadows) {
  std::vector<Subperiod> out;
  for (const auto& sh : shadows)
    for (const auto& p : sh.periods) out.push_back(p);
  return out;
}

std::vector<ShadowPeriods> subperiods_numeric(const SlopeSpec& s, int bound, double tol) {
  const Grassmann g = grassmann(s);
  double top = 0.0;
  for (double c : g.values) top = std::max(top, std::abs(c));
  std::vector<ShadowPeriods> out;
  for (const auto& t : triples(s.n)) {
    auto [i, j, k] = t;
    ShadowPeriods sp;
    sp.indices = t;
    std::vector<IntVector> found;
    for (int p = -bound; p <= bound; ++p)
      for (int q = -bound; q <= bound; ++q)
        for (int r = -bound; r <= bound; ++r) {
          if (std::gcd(std::gcd(std::abs(p), std::abs(q)), std::abs(r)) != 1) continue;
          IntVector v{p, q, r};
          if (make_primitive(v) != v) continue;  // keep the first-nonzero-positive representative
          const double res = p * g.at(j, k) - q * g.at(i, k) + r * g.at(i, j);
          if (std::abs(res) <= tol * top) found.push_back(v);
        }
    // Reduce to a lattice basis of what was found.
    for (auto& v : hermite_rows(found)) sp.periods.push_back({t, make_primitive(std::move(v))});
    out.push_back(std::move(sp));
  }
  return out;
}

double SubperiodLift::norm() const { return std::sqrt(norm_squared.to_double()); }

std::vector<double> SubperiodLift::numeric() const {
  std::vector<double> out;
  for (const auto& c : vector) out.push_back(c.to_double());
  return out;
}

SubperiodLift lift_subperiod(const SlopeSpec& s, const Subperiod& sp) {
  if (!s.is_exact()) throw Error(Errc::invalid_argument, "exact lifts need an exact slope");
  if (sp.vector.size() != 3) throw Error(Errc::invalid_argument, "subperiod vectors have three entries");
  const auto& idx = sp.indices;
  std::array<AlgebraicNumber, 3> p;
  for (std::size_t t = 0; t < 3; ++t) p[t] = AlgebraicNumber(NumberField::rationals(), Rational(sp.vector[t]));

  // Solve lambda u_a + mu v_a = p_a on a pair of the shadow's coordinates
  // with an invertible 2x2 block, then check the remaining coordinate.
  const std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [x, y] : pairs) {
    const std::size_t a = idx[x], b = idx[y];
    const AlgebraicNumber gab = det2(s.u[a], s.v[a], s.u[b], s.v[b]);
    if (gab.is_zero()) continue;
    const AlgebraicNumber inv = gab.inverse();
    SubperiodLift lift;
    lift.subperiod = sp;
    lift.lambda = (p[x] * s.v[b] - p[y] * s.v[a]) * inv;
    lift.mu = (s.u[a] * p[y] - s.u[b] * p[x]) * inv;
    for (std::size_t c = 0; c < s.n; ++c) lift.vector.push_back(lift.lambda * s.u[c] + lift.mu * s.v[c]);
    for (std::size_t t = 0; t < 3; ++t)
      if (!(lift.vector[idx[t]] == p[t]))
        throw Error(Errc::no_lift, "the slope's shadow does not contain this vector");
    lift.norm_squared = AlgebraicNumber(0);
    for (const auto& c : lift.vector) lift.norm_squared += c * c;
    return lift;
  }
  throw Error(Errc::non_unique, "the slope projects onto this shadow non-injectively");
}

bool has_rational_line(const SlopeSpec& s) {
  if (!s.is_exact()) throw Error(Errc::invalid_argument, "rational line test needs an exact slope");
  const Grassmann g = grassmann(s);
  // w lies in E iff w_i G_jk - w_j G_ik + w_k G_ij = 0 for all i<j<k.
  Matrix<Rational> rows;
  for (const auto& [i, j, k] : triples(s.n)) {
    std::vector<AlgebraicNumber> form(s.n, AlgebraicNumber(0));
    form[i] = g.exact_at(j, k);
    form[j] = -g.exact_at(i, k);
    form[k] = g.exact_at(i, j);
    for (auto& r : expand_rows(form)) rows.push_back(std::move(r));
  }
  return !integer_kernel(rows, s.n).empty();
}

LevitovVerdict levitov_condition(const SlopeSpec& s) {
  if (s.n != 4) throw Error(Errc::not_codim_two, "the Levitov condition applies to slopes in R^4");
  if (!s.is_exact()) throw Error(Errc::invalid_argument, "the Levitov condition needs an exact slope");
  const Grassmann g = grassmann(s);
  for (std::size_t k = 0; k < g.exact.size(); ++k)
    if (g.exact[k].is_zero())
      throw Error(Errc::degenerate_slope, "Grassmann coordinate " + g.legend()[k] + " vanishes");
  LevitovVerdict out;
  out.shadows = subperiods(s);
  if (has_rational_line(s)) {
    out.reason = "the slope contains a rational line";
    return out;
  }
  std::vector<SubperiodLift> lone;
  for (const auto& sh : out.shadows)
    if (sh.count() == 1) lone.push_back(lift_subperiod(s, sh.periods.front()));
  const auto collinear = [](const SubperiodLift& a, const SubperiodLift& b) {
    return (a.lambda * b.mu - a.mu * b.lambda).is_zero();
  };
  for (std::size_t a = 0; a < lone.size(); ++a)
    for (std::size_t b = a + 1; b < lone.size(); ++b)
      for (std::size_t c = b + 1; c < lone.size(); ++c)
        if (!collinear(lone[a], lone[b]) && !collinear(lone[a], lone[c]) && !collinear(lone[b], lone[c])) {
          out.holds = true;
          out.witness = {lone[a], lone[b], lone[c]};
          out.reason = "three lone subperiods lift to pairwise non-collinear vectors";
          return out;
        }
  out.reason = lone.size() < 3 ? "fewer than three shadows have exactly one subperiod"
                               : "lifts of the lone subperiods lie on at most two lines";
  return out;
}

LinearRelationSet subperiod_relations(const std::vector<Subperiod>& sps, std::size_t n) {
  LinearRelationSet out;
  out.n = n;
  for (const auto& sp : sps) {
    auto [i, j, k] = sp.indices;
    std::vector<Rational> row(pair_count(n), Rational(0));
    row[pair_index(n, j, k)] += Rational(sp.vector[0]);
    row[pair_index(n, i, k)] -= Rational(sp.vector[1]);
    row[pair_index(n, i, j)] += Rational(sp.vector[2]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string relation_to_string(const std::vector<Rational>& row, std::size_t n) {
  const auto pairs = index_pairs(n);
  std::vector<std::string> lhs, rhs;
  const auto name = [&](std::size_t k) {
    const std::string sep = n > 9 ? "," : "";
    return "G" + std::to_string(pairs[k].first + 1) + sep + std::to_string(pairs[k].second + 1);
  };
  // Positive terms on the left, negative ones moved to the right.
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    const Rational mag = abs(row[k]);
    std::string term = (mag == 1 ? "" : to_string(mag) + "*") + name(k);
    (row[k] > 0 ? lhs : rhs).push_back(term);
  }
  const auto join = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("0");
    std::string s = v.front();
    for (std::size_t t = 1; t < v.size(); ++t) s += " + " + v[t];
    return s;
  };
  return join(lhs) + " = " + join(rhs);
}

}  // namespace rhombus
