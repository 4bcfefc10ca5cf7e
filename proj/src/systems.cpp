#include "rhombus/systems.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <sstream>

namespace rhombus {

std::vector<Quad> plucker_relations(std::size_t n) {
  std::vector<Quad> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) out.push_back({i, j, k, l});
  return out;
}

MPoly plucker_polynomial(std::size_t n, const Quad& q) {
  const std::size_t nv = pair_count(n);
  const auto g = [&](std::size_t a, std::size_t b) { return MPoly::variable(nv, pair_index(n, a, b)); };
  auto [i, j, k, l] = q;
  return g(i, j) * g(k, l) - g(i, k) * g(j, l) + g(i, l) * g(j, k);
}

std::string coordinate_name(std::size_t n, std::size_t pair) {
  const auto pairs = index_pairs(n);
  const std::string sep = n > 9 ? "," : "";
  return "G" + std::to_string(pairs[pair].first + 1) + sep + std::to_string(pairs[pair].second + 1);
}

ReducedForm reduce(const LinearRelationSet& l) {
  const std::size_t nc = pair_count(l.n);
  for (const auto& row : l.rows)
    if (row.size() != nc) throw Error(Errc::invalid_argument, "relation rows must have n choose 2 entries");
  ReducedForm f;
  f.n = l.n;
  std::vector<std::size_t> order;
  for (std::size_t c = nc; c-- > 0;) order.push_back(c);
  f.echelon = rref(l.rows, nc, order);
  std::vector<bool> pivot(nc, false);
  for (auto p : f.echelon.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < nc; ++c)
    if (!pivot[c]) f.free.push_back(c);
  f.expression.assign(nc, std::vector<Rational>(nc, Rational(0)));
  for (auto c : f.free) f.expression[c][c] = 1;
  for (std::size_t r = 0; r < f.echelon.rows.size(); ++r) {
    const std::size_t p = f.echelon.pivots[r];
    for (auto c : f.free) f.expression[p][c] = -f.echelon.rows[r][c];
  }
  return f;
}

std::string to_string(Dimension d) {
  switch (d) {
    case Dimension::empty: return "empty";
    case Dimension::zero: return "0";
    case Dimension::one: return "1";
    case Dimension::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<std::string> ReducedSystem::variable_names() const {
  std::vector<std::string> out;
  for (auto v : variables) out.push_back(coordinate_name(n, v));
  return out;
}

namespace {

int rank_of(Dimension d) {
  switch (d) {
    case Dimension::empty: return 0;
    case Dimension::zero: return 1;
    case Dimension::one: return 2;
    case Dimension::unknown: return 3;
  }
  return 3;
}

// Solutions of a one-variable chart: rational roots first, then one field
// per remaining real root of the leftover squarefree factor.
std::vector<AlgebraicNumber> real_solutions(const RationalPoly& g) {
  RationalPoly rest = squarefree_part(g).monic();
  std::vector<AlgebraicNumber> out;
  for (const auto& r : rational_roots(rest)) {
    out.emplace_back(NumberField::rationals(), r);
    rest = divmod(rest, RationalPoly(std::vector<Rational>{-r, 1})).quotient;
  }
  if (rest.degree() >= 1)
    for (const auto& iv : real_roots(rest))
      out.push_back(AlgebraicNumber::generator(NumberField::create(rest, iv.lo, iv.hi)));
  return out;
}

ReducedSystem analyze_chart(const LinearRelationSet& l, const ReducedForm& form, std::size_t chart) {
  ReducedSystem sys;
  sys.n = l.n;
  sys.relations = l;
  sys.form = form;
  sys.pivot = form.free[chart];
  sys.fixed_zero.assign(form.free.begin(), form.free.begin() + static_cast<long>(chart));
  sys.variables.assign(form.free.begin() + static_cast<long>(chart) + 1, form.free.end());
  const std::size_t nv = sys.variables.size();
  const std::size_t nc = pair_count(l.n);

  // Each coordinate as a polynomial in the chart variables.
  std::vector<MPoly> coord(nc, MPoly(nv));
  for (std::size_t c = 0; c < nc; ++c) {
    MPoly e(nv);
    for (std::size_t f = 0; f < form.free.size(); ++f) {
      const Rational& w = form.expression[c][form.free[f]];
      if (w == 0 || f < chart) continue;
      e = e + (f == chart ? MPoly::constant(nv, w) : w * MPoly::variable(nv, f - chart - 1));
    }
    coord[c] = e;
  }
  for (const auto& q : plucker_relations(l.n)) {
    auto [i, j, k, m] = q;
    const auto g = [&](std::size_t a, std::size_t b) { return coord[pair_index(l.n, a, b)]; };
    MPoly r = (g(i, j) * g(k, m) - g(i, k) * g(j, m) + g(i, m) * g(j, k)).normalized();
    sys.residuals.push_back(r);
    if (!r.is_zero() && std::find(sys.distinct.begin(), sys.distinct.end(), r) == sys.distinct.end())
      sys.distinct.push_back(r);
  }

  const auto solution_from = [&](const std::vector<AlgebraicNumber>& values) {
    std::vector<AlgebraicNumber> g;
    for (std::size_t c = 0; c < nc; ++c) g.push_back(coord[c].evaluate(values));
    return Grassmann::from_exact(l.n, std::move(g));
  };

  if (nv == 0) {
    const bool consistent = sys.distinct.empty();
    sys.dimension = consistent ? Dimension::zero : Dimension::empty;
    if (consistent) sys.solutions.push_back(solution_from({}));
    sys.note = consistent ? "all coordinates fixed" : "relations contradict the Plücker relations";
    return sys;
  }
  if (nv == 1) {
    if (sys.distinct.empty()) {
      sys.dimension = Dimension::one;
      sys.note = "one free coordinate, Plücker relations hold identically";
      return sys;
    }
    RationalPoly g = *sys.distinct.front().univariate(0);
    for (const auto& r : sys.distinct) g = gcd(g, *r.univariate(0));
    g = g.monic();
    sys.univariate = g;
    if (g.degree() < 1) {
      sys.dimension = Dimension::empty;
      sys.note = "residuals have no common root";
      return sys;
    }
    for (const auto& x : real_solutions(g)) sys.solutions.push_back(solution_from({x}));
    sys.dimension = sys.solutions.empty() ? Dimension::empty : Dimension::zero;
    sys.note = sys.solutions.empty() ? "no real root" : "finitely many slopes";
    return sys;
  }
  if (sys.distinct.empty()) {
    sys.dimension = Dimension::unknown;
    sys.note = "at least " + std::to_string(nv) + " free parameters";
    return sys;
  }
  if (l.n == 4) {
    sys.dimension = Dimension::one;
    sys.note = "curve cut out by the Plücker quadric";
    return sys;
  }
  sys.dimension = Dimension::unknown;
  sys.note = "more than one variable left; no elimination engine";
  return sys;
}

}  // namespace

ReducedSystem classify(const LinearRelationSet& l) {
  if (l.n < 4) throw Error(Errc::invalid_argument, "Plücker relations need n >= 4");
  const ReducedForm form = reduce(l);
  if (form.free.empty()) {
    ReducedSystem sys;
    sys.n = l.n;
    sys.relations = l;
    sys.form = form;
    sys.dimension = Dimension::empty;
    sys.note = "relations force every coordinate to vanish";
    return sys;
  }
  std::optional<ReducedSystem> first;
  Dimension overall = Dimension::empty;
  std::vector<Grassmann> solutions;
  for (std::size_t chart = 0; chart < form.free.size(); ++chart) {
    ReducedSystem sys = analyze_chart(l, form, chart);
    if (rank_of(sys.dimension) > rank_of(overall)) overall = sys.dimension;
    for (auto& s : sys.solutions) solutions.push_back(s);
    if (!first && sys.dimension != Dimension::empty) first = std::move(sys);
  }
  if (!first) first = analyze_chart(l, form, 0);
  first->dimension = overall;
  if (overall == Dimension::zero) first->solutions = std::move(solutions);
  else first->solutions.clear();
  return *first;
}

ReducedSystem classify_chart(const LinearRelationSet& l, std::size_t pivot) {
  if (l.n < 4) throw Error(Errc::invalid_argument, "Plücker relations need n >= 4");
  ReducedForm form = reduce(l);
  const auto it = std::find(form.free.begin(), form.free.end(), pivot);
  if (it == form.free.end())
    throw Error(Errc::invalid_argument, coordinate_name(l.n, pivot) + " is not a free coordinate");
  std::rotate(form.free.begin(), it, it + 1);
  ReducedSystem sys = analyze_chart(l, form, 0);
  return sys;
}

ReducedSystem classify_codim2(const LinearRelationSet& l) {
  if (l.n != 4) throw Error(Errc::not_codim_two, "classify_codim2 expects relations on 6 coordinates (n = 4)");
  return classify(l);
}

RationalPoly chebyshev_u(std::size_t i) {
  RationalPoly prev = RationalPoly::constant(1);
  if (i == 0) return prev;
  RationalPoly cur = RationalPoly{0, 2};
  for (std::size_t k = 2; k <= i; ++k) {
    RationalPoly next = RationalPoly{0, 2} * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

MPoly chebyshev_u_xy(std::size_t i) {
  const MPoly x2 = Rational(2) * MPoly::variable(2, 0);
  const MPoly y2 = Rational(2) * MPoly::variable(2, 1);
  MPoly prev = MPoly::constant(2, 1);
  if (i == 0) return prev;
  MPoly cur = x2;
  for (std::size_t k = 2; k <= i; ++k) {
    MPoly next = (k % 2 == 0 ? y2 : x2) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::string NfoldIdentity::to_string() const {
  const auto name = [](long a, long b) { return "G" + std::to_string(a) + "," + std::to_string(b); };
  std::string rhs = factor == 1 ? name(k, l) : rhombus::to_string(factor) + "*" + name(k, l);
  return name(i, j) + " = " + rhs;
}

std::pair<int, long> nfold_reduce(std::size_t n, long delta) {
  const bool odd = n % 2 == 1;
  const long period = static_cast<long>(odd ? n : n / 2);
  int sign = 1;
  // Odd n: G(d + n) = G(d). Even n: G(d + n/2) = -G(d). Always G(-d) = -G(d).
  long q = delta / period;
  long d = delta % period;
  if (d < 0) {
    d += period;
    --q;
  }
  if (!odd && (q % 2 != 0)) sign = -sign;
  if (2 * d > period) {
    // G(d) = G(d - P) (odd) or -G(d - P) (even), then antisymmetry.
    d = period - d;
    if (odd) sign = -sign;
  }
  return {sign, d};
}

ChebyshevReport nfold_system(std::size_t n) {
  if (n < 4) throw Error(Errc::invalid_argument, "n-fold systems need n >= 4");
  ChebyshevReport r;
  r.n = n;
  r.m = n % 2 == 1 ? n : n / 2;
  r.product_form = n % 4 == 0;
  r.dimension = r.product_form ? 1 : 0;
  const long m = static_cast<long>(r.m);
  for (long i = 1; i <= m; ++i)
    for (long j = i + 1; j <= m; ++j) r.identities.push_back({i, j, j, 2 * j - i, Rational(1)});
  if (n % 12 == 0) {
    const long p = static_cast<long>(n / 12);
    for (long i = 1; i <= m; ++i) {
      r.identities.push_back({i, i + 3 * p, i, i + p, Rational(2)});
      r.identities.push_back({i, i + 3 * p, i, i + 5 * p, Rational(2)});
    }
  }
  // U_{m-2} = G_{1,m} / G_{12}; the chain G_{i,i+1} = G_12 fixes the ratio.
  auto [sign, d] = nfold_reduce(n, m - 1);
  if (d != 1) throw Error(Errc::invalid_argument, "unexpected reduction of G_{1,m}");
  r.rhs = sign;
  r.u_xy = chebyshev_u_xy(r.m - 2);
  if (!r.product_form) {
    r.polynomial = chebyshev_u(r.m - 2) - RationalPoly::constant(r.rhs);
    r.constraint = chebyshev_u(r.m - 2).to_string("X") + " = " + to_string(r.rhs);
    return r;
  }
  // Only powers of XY occur: read off the coefficient of X^k Y^k.
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : r.u_xy.terms()) {
    if (mono[0] != mono[1]) throw Error(Errc::invalid_argument, "U contains a term that is not a power of XY");
    if (coeffs.size() <= mono[0]) coeffs.resize(mono[0] + 1);
    coeffs[mono[0]] = c;
  }
  const RationalPoly uz(coeffs);
  r.polynomial = uz - RationalPoly::constant(r.rhs);
  if (r.polynomial.degree() == 1) {
    const Rational root = -r.polynomial.coeff(0) / r.polynomial.coeff(1);
    r.constraint = "XY=" + to_string(root);
  } else {
    r.constraint = uz.to_string("(XY)") + " = " + to_string(r.rhs);
  }
  return r;
}

Grassmann propagate_band(std::size_t n, const std::vector<AlgebraicNumber>& band) {
  if (n < 3 || band.size() != 2 * n - 3) throw Error(Errc::invalid_argument, "band needs 2n-3 values");
  std::vector<std::vector<AlgebraicNumber>> g(n, std::vector<AlgebraicNumber>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g[i][i + 1] = band[i];
  for (std::size_t i = 0; i + 2 < n; ++i) g[i][i + 2] = band[n - 1 + i];
  for (std::size_t delta = 3; delta < n; ++delta)
    for (std::size_t i = 0; i + delta < n; ++i) {
      const std::size_t j = i + delta;
      const AlgebraicNumber& den = g[i + 1][j - 1];
      if (den.is_zero()) throw Error(Errc::division_by_zero, "band value " + coordinate_name(n, pair_index(n, i + 1, j - 1)) + " vanishes");
      g[i][j] = (g[i][j - 1] * g[i + 1][j] - g[i][i + 1] * g[j - 1][j]) / den;
    }
  std::vector<AlgebraicNumber> coords;
  for (auto [i, j] : index_pairs(n)) coords.push_back(g[i][j]);
  return Grassmann::from_exact(n, std::move(coords));
}

Intersection intersect_lifted_slopes(std::size_t n, const std::vector<LiftConstraint>& constraints) {
  std::vector<bool> covered(n, false);
  Matrix<AlgebraicNumber> rows;
  for (const auto& c : constraints) {
    if (!c.slope.is_exact()) throw Error(Errc::invalid_argument, "lifted slopes must be exact");
    if (c.indices.size() != c.slope.n) throw Error(Errc::invalid_argument, "index set and slope dimension differ");
    Matrix<AlgebraicNumber> gen{c.slope.u, c.slope.v};
    // Normals of the plane inside the projection's coordinates.
    for (const auto& w : kernel_basis(gen, c.slope.n)) {
      std::vector<AlgebraicNumber> row(n, AlgebraicNumber(0));
      for (std::size_t t = 0; t < c.indices.size(); ++t) {
        if (c.indices[t] >= n) throw Error(Errc::invalid_argument, "constraint index out of range");
        row[c.indices[t]] = w[t];
      }
      rows.push_back(std::move(row));
    }
    for (auto idx : c.indices) covered[idx] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw Error(Errc::invalid_argument, "constraints must cover every coordinate");
  Intersection out;
  out.basis = kernel_basis(rows, n);
  out.dimension = out.basis.size();
  if (out.dimension == 0) throw Error(Errc::inconsistent_constraints, "the lifted slopes meet only at 0");
  return out;
}

}  // namespace rhombus
