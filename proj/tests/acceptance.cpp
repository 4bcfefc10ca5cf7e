// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "rhombus/atlas.hpp"
#include "rhombus/cli.hpp"
#include "rhombus/error.hpp"
#include "rhombus/json_io.hpp"
#include "rhombus/planarity.hpp"
#include "rhombus/render.hpp"
#include "rhombus/subperiods.hpp"
#include "rhombus/systems.hpp"
#include "rhombus/tiling.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rhombus;

namespace {

const double phi = (1 + std::sqrt(5.0)) / 2;
const double pi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  std::string name;
  double budget_s;  // 0: no stated limit
  std::function<void(Outcome&)> body;
};

using Periods = std::map<Triple, std::vector<std::vector<long>>>;

Periods period_table(const SlopeSpec& s) {
  Periods t;
  for (const auto& sh : subperiods(s))
    for (const auto& p : sh.periods) t[sh.indices].push_back({p.vector[0].get_si(), p.vector[1].get_si(), p.vector[2].get_si()});
  return t;
}

double max_lift(const SlopeSpec& s) {
  double best = 0;
  for (const auto& sh : subperiods(s))
    for (const auto& sp : sh.periods) best = std::max(best, lift_subperiod(s, sp).norm());
  return best;
}

LinearRelationSet relations_of(const SlopeSpec& s) {
  return subperiod_relations(all_subperiods(subperiods(s)), s.n);
}

bool is_golden_quadratic(const RationalPoly& p) { return p.primitive().coeffs() == RationalPoly{-1, -1, 1}.coeffs(); }

bool relations_hold(const LinearRelationSet& l, const Grassmann& g) {
  for (const auto& row : l.rows) {
    AlgebraicNumber x(g.exact.front().field());
    for (std::size_t k = 0; k < row.size(); ++k) x += AlgebraicNumber(x.field(), row[k]) * g.exact[k];
    if (!x.is_zero()) return false;
  }
  return true;
}

// --- criteria -------------------------------------------------------------

void golden_octagonal(Outcome& o) {
  const SlopeSpec s = presets::golden_octagonal();
  const Periods expect{{{0, 1, 2}, {{1, 1, 0}}}, {{0, 1, 3}, {{0, 1, 1}}}, {{0, 2, 3}, {{1, 1, 0}}}, {{1, 2, 3}, {{0, 1, 1}}}};
  o.expect(period_table(s) == expect, "four subperiods e1+e2, e2+e4, e1+e3, e3+e4");
  const ReducedSystem r = classify_codim2(relations_of(s));
  o.expect(r.dimension == Dimension::zero, "dimension 0");
  o.expect(r.univariate && is_golden_quadratic(*r.univariate), "residual x^2 - x - 1");
  const double m = max_lift(s);
  o.notes << " max lift " << m;
  o.expect(std::abs(m - std::sqrt(phi + 3)) <= 1e-9, "max lift sqrt(phi + 3)");

  // Same answers through the command line.
  std::ostringstream out, err;
  o.expect(run({"subperiods", "--preset", "golden"}, out, err) == 0, "subperiods command");
  const Json sub = Json::parse(out.str());
  Json want = Json::array();
  for (const auto& [t, ps] : expect) want.push_back({{"shadow", {t[0] + 1, t[1] + 1, t[2] + 1}}, {"periods", ps}});
  Json got = Json::array();
  for (const auto& sh : sub.at("shadows")) got.push_back({{"shadow", sh.at("shadow")}, {"periods", sh.at("periods")}});
  o.expect(got == want && sub.at("count") == 4, "subperiods command lists the four subperiods");
  std::ostringstream sout;
  o.expect(run({"system", "--preset", "golden"}, sout, err) == 0, "system command");
  const Json sys = Json::parse(sout.str());
  o.expect(sys.at("dimension") == 0 && sys.at("minpoly") == Json::array({-1, -1, 1}), "system command: dimension 0, x^2 - x - 1");
}

void ammann_beenker(Outcome& o) {
  const SlopeSpec s = presets::ammann_beenker();
  const Periods expect{{{0, 1, 2}, {{1, 0, -1}}}, {{0, 1, 3}, {{0, 1, 1}}}, {{0, 2, 3}, {{1, 1, 0}}}, {{1, 2, 3}, {{1, 0, -1}}}};
  o.expect(period_table(s) == expect, "four subperiods");
  const LinearRelationSet l = relations_of(s);
  const ReducedSystem r = classify_codim2(l);
  o.expect(r.dimension == Dimension::one, "dimension 1");
  o.expect(r.pivot == 0, "chart G12 = 1");
  bool residual = r.distinct.size() == 1;
  if (residual) {
    // A multiple of G13 G24 - 2 in the variables (G13, G24).
    const MPoly& p = r.distinct[0];
    residual = p.terms().size() == 2 && p.total_degree() == 2 && std::abs(p.evaluate(std::vector<double>{1.0, 2.0})) < 1e-12 &&
               std::abs(p.evaluate(std::vector<double>{3.0, 2.0 / 3})) < 1e-12 &&
               std::abs(p.evaluate(std::vector<double>{0.0, 0.0})) > 0;
  }
  o.expect(residual, "residual G13 G24 = 2");

  const FieldPtr f = presets::sqrt2_field();
  const std::vector<AlgebraicNumber> ts{AlgebraicNumber(f, make_rational(1, 4)), AlgebraicNumber(f, Rational(1)),
                                        AlgebraicNumber::generator(f), AlgebraicNumber(f, Rational(3))};
  for (const auto& t : ts) {
    const Grassmann g = presets::ammann_beenker_family(t);
    o.expect(plucker_check(g).empty(), "family passes plucker_check at t = " + t.to_string());
    o.expect(relations_hold(l, g), "family satisfies the subperiod relations at t = " + t.to_string());
  }
  // Square tiles T13 and T24 on a grid of t.
  double best_t = 0, best = 1e300;
  for (int k = 1; k <= 4000; ++k) {
    const double t = k * 1e-3;
    const Frequencies fr = frequencies(Grassmann::from_numeric(4, {1, t, 1, 1, 2 / t, 1}));
    const double sq = fr.values[1] + fr.values[4];
    if (sq < best) {
      best = sq;
      best_t = t;
    }
  }
  o.notes << " square frequency minimal at t = " << best_t;
  o.expect(std::abs(best_t - std::sqrt(2.0)) <= 1e-3, "minimum at sqrt 2");
}

void penrose(Outcome& o) {
  const SlopeSpec s = presets::penrose();
  const auto shadows = subperiods(s);
  bool one_each = shadows.size() == 10;
  for (const auto& sh : shadows) one_each = one_each && sh.count() == 1;
  o.expect(one_each, "ten subperiods, one per shadow");
  const ReducedSystem r = classify_chart(relations_of(s), 1);
  std::size_t quadratic = 0;
  bool all = true;
  for (const auto& p : r.residuals) {
    if (p.is_zero()) continue;
    const auto u = p.univariate(0);
    if (u && is_golden_quadratic(*u)) ++quadratic;
    else all = false;
  }
  o.expect(all && quadratic == 5, "all five Plücker relations reduce to x^2 = x + 1");
  std::vector<LiftConstraint> cons;
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 5; ++k)
      if (k != skip) idx.push_back(k);
    cons.push_back({idx, s.restrict_to(idx)});
  }
  o.expect(intersect_lifted_slopes(5, cons).dimension == 2, "intersection dimension 2");
  const double m = max_lift(s);
  o.notes << " max lift " << m;
  o.expect(std::abs(m - std::sqrt(2 + 2 * phi * phi)) <= 1e-9, "max lift sqrt(2 + 2 phi^2)");
}

void cubic_dodecagonal(Outcome& o) {
  const FieldPtr f = presets::cubic_field();
  const AlgebraicNumber a = AlgebraicNumber::generator(f);
  const AlgebraicNumber one(f, Rational(1));
  const AlgebraicNumber b = a * a - one;
  const Grassmann g = Grassmann::from_exact(6, {one, a, b, b, a, one, a, b, b, one, a, b, one, a, one});
  o.expect(a.to_double() > 1 && a.to_double() < 2, "a in (1, 2)");
  o.expect(plucker_check(g).empty() && plucker_relations(6).size() == 15, "15 Plücker relations hold exactly");
  const SlopeSpec s = presets::cubic_dodecagonal();
  const Grassmann gs = grassmann(s).normalized();
  bool same = true;
  for (std::size_t k = 0; k < 15; ++k) same = same && gs.exact[k] == g.exact[k];
  o.expect(same, "basis spans the 15-tuple");
  const std::vector<std::size_t> p1{0, 1, 2, 4}, p2{0, 3, 4, 5};
  o.expect(levitov_condition(s.restrict_to(p1)).holds, "projection 1235 satisfies the codim-2 condition");
  o.expect(levitov_condition(s.restrict_to(p2)).holds, "projection 1456 satisfies the codim-2 condition");
  o.expect(intersect_lifted_slopes(6, {{p1, s.restrict_to(p1)}, {p2, s.restrict_to(p2)}}).dimension == 2,
           "intersection dimension 2");
  const double m = max_lift(s);
  o.notes << " max lift " << m;
  o.expect(m <= 2.821 + 1e-3, "max lift <= 2.821");
}

void nfold(Outcome& o) {
  for (std::size_t n : {5, 7, 9, 10, 11, 13, 14}) o.expect(nfold_system(n).dimension == 0, "dimension 0 at n = " + std::to_string(n));
  for (std::size_t n : {8, 12, 16}) o.expect(nfold_system(n).dimension == 1, "dimension 1 at n = " + std::to_string(n));
  const ChebyshevReport five = nfold_system(5);
  o.expect(std::abs(five.polynomial.eval(std::cos(2 * pi / 5))) <= 1e-9, "cos(2 pi / 5) satisfies the n = 5 constraint");
  const ChebyshevReport eight = nfold_system(8);
  o.expect(eight.constraint == "XY=1/2", "n = 8 constraint XY = 1/2");
  const double h = std::sqrt(2.0) / 2;
  o.expect(std::abs(eight.u_xy.evaluate(std::vector<double>{h, h}) - eight.rhs.get_d()) <= 1e-9, "X = Y = sqrt2/2 satisfies it");
  std::size_t extra = 0;
  bool valid = true;
  for (const auto& id : nfold_system(12).identities) {
    if (id.factor != 2) continue;
    ++extra;
    // sin(pi/6) = 1/2 ties G_{i,i+3} to G_{i,i+1}.
    valid = valid && std::abs(std::sin(2 * pi * (id.j - id.i) / 12) - 2 * std::sin(2 * pi * (id.l - id.k) / 12)) < 1e-12;
  }
  o.expect(extra > 0 && valid, "n = 12 carries the sin(pi/6) relations");
}

void canonical_patch(const SlopeSpec& s, Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Patch p = generate_patch(s, 30);
  const ThicknessReport t = thickness(lift_cloud(p), s, true);
  o.notes << " t " << t.t << " (raw " << t.raw << ")";
  o.expect(t.t >= 1 - 1e-6 && t.t <= 1 + 1e-6, "thickness 1");
  const auto exact = frequencies(grassmann(s)).values;
  const auto emp = empirical_frequencies(p);
  double err = 0;
  for (std::size_t k = 0; k < emp.size(); ++k) err = std::max(err, std::abs(emp[k] - exact[k]));
  o.notes << " freq err " << err;
  o.expect(err <= 0.02, "frequencies within 0.02");
  for (const auto& sh : subperiods(s)) {
    const Shadow proj = shadow(p, sh.indices);
    for (const auto& sp : sh.periods)
      o.expect(empirical_period(proj, {sp.vector[0].get_si(), sp.vector[1].get_si(), sp.vector[2].get_si()}),
               "empirical period on shadow");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 30, "under 30 s per patch");
}

void canonical_patches(Outcome& o) {
  canonical_patch(presets::golden_octagonal(), o);
  canonical_patch(presets::ammann_beenker(), o);
}

void levitov_counterexample(Outcome& o) {
  const SlopeSpec e = presets::golden_octagonal();
  const SlopeSpec ep = conjugate_slope(e);
  const auto cubic = SurfaceFunction::parse("cubic");
  const double t5 = thickness(levitov_surface(e, ep, cubic, cubic, 5, 0.5).cloud, e).raw;
  const double t20 = thickness(levitov_surface(e, ep, cubic, cubic, 20, 0.5).cloud, e).raw;
  o.notes << " thickness ratio " << t20 / t5;
  o.expect(t20 >= 10 * t5, "thickness grows tenfold from R = 5 to R = 20");
  const auto st = SurfaceFunction::parse("staircase");
  const LevitovSurface s = levitov_surface(e, ep, st, st, 20, 0.5);
  for (const Subperiod* p : {&s.p1, &s.p2}) {
    const PeriodicityCheck c = check_shadow_period(s.cloud, p->indices, p->vector);
    o.expect(c.periodic, "staircase shadow periodic");
  }
}

void property_suites(Outcome& o) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-6, 6);
  // Field axioms in a cubic field.
  const FieldPtr f = presets::cubic_field();
  auto rnd = [&] {
    return AlgebraicNumber(f, std::vector<Rational>{Rational(d(rng)), make_rational(d(rng), 5), Rational(d(rng))});
  };
  bool field_ok = true;
  for (int k = 0; k < 100; ++k) {
    const AlgebraicNumber x = rnd(), y = rnd(), z = rnd();
    field_ok = field_ok && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
               x * y == y * x;
    if (!x.is_zero()) field_ok = field_ok && x * x.inverse() == AlgebraicNumber(f, Rational(1));
  }
  o.expect(field_ok, "field axioms");

  // Random exact slopes: Plücker validity and the determinant rule under basis change.
  bool pl_ok = true, basis_ok = true;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 4 + static_cast<std::size_t>(k % 3);
    std::vector<AlgebraicNumber> u, v;
    for (std::size_t i = 0; i < n; ++i) {
      u.push_back(rnd());
      v.push_back(rnd());
    }
    Grassmann g;
    try {
      g = grassmann(SlopeSpec::exact(f, u, v));
    } catch (const Error&) {
      continue;
    }
    pl_ok = pl_ok && plucker_check(g).empty();
    const Rational a(d(rng)), b(d(rng)), c(d(rng)), e(d(rng));
    const Rational det = a * e - b * c;
    if (det == 0) continue;
    std::vector<AlgebraicNumber> u2, v2;
    for (std::size_t i = 0; i < n; ++i) {
      u2.push_back(AlgebraicNumber(f, a) * u[i] + AlgebraicNumber(f, b) * v[i]);
      v2.push_back(AlgebraicNumber(f, c) * u[i] + AlgebraicNumber(f, e) * v[i]);
    }
    const Grassmann g2 = grassmann(SlopeSpec::exact(f, u2, v2));
    for (std::size_t i = 0; i < g.exact.size(); ++i) basis_ok = basis_ok && g2.exact[i] == AlgebraicNumber(f, det) * g.exact[i];
  }
  o.expect(pl_ok, "random exact slopes are Plücker valid");
  o.expect(basis_ok, "basis change scales by the determinant");

  // Band propagation rebuilds the n-fold and cubic slopes.
  bool band_ok = true;
  for (const auto& s : {presets::cubic_dodecagonal(), presets::penrose()}) {
    const Grassmann g = grassmann(s);
    std::vector<AlgebraicNumber> band;
    for (std::size_t i = 0; i + 1 < s.n; ++i) band.push_back(g.exact_at(i, i + 1));
    for (std::size_t i = 0; i + 2 < s.n; ++i) band.push_back(g.exact_at(i, i + 2));
    const Grassmann h = propagate_band(s.n, band);
    for (std::size_t k = 0; k < g.exact.size(); ++k) band_ok = band_ok && h.exact[k] == g.exact[k];
  }
  o.expect(band_ok, "band coordinates determine the rest");

  // Atlas monotonicity and containment.
  const Patch small = generate_patch(presets::golden_octagonal(), 10);
  const Patch big = generate_patch(presets::golden_octagonal(), 20);
  const PatchGeometry geo(big);
  bool mono = true;
  for (std::size_t v : geo.interior_centers(2)) {
    const Eigen::Vector2d c = geo.position(big.vertices[v]);
    const auto a = geo.r_map(c, 1), b = geo.r_map(c, 2);
    const std::set<Tile> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    mono = mono && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  }
  o.expect(mono, "r-maps grow with r");
  o.expect(atlas_contains(r_atlas(big, 1.5), r_atlas(small, 1.5)).contains, "sub-patch atlas contained");

  const std::string svg = to_svg(small);
  o.expect(svg == to_svg(generate_patch(presets::golden_octagonal(), 10)), "SVG byte deterministic");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 golden octagonal", 1, golden_octagonal},
      {"2 Ammann-Beenker", 1, ammann_beenker},
      {"3 generalized Penrose", 5, penrose},
      {"4 cubic dodecagonal", 10, cubic_dodecagonal},
      {"5 n-fold systems", 0, nfold},
      {"6 canonical patches", 0, canonical_patches},
      {"7 Levitov counterexample", 0, levitov_counterexample},
      {"8 property suites", 0, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes << " [threw: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.notes << " [over budget: " << secs << " s > " << c.budget_s << " s]";
    }
    std::printf("%s %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), secs, o.notes.str().c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
