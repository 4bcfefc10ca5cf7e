#include "doctest.h"

#include "rhombus/error.hpp"
#include "rhombus/systems.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace rhombus;

namespace {

const double pi = std::numbers::pi;

LinearRelationSet relations_of(const SlopeSpec& s) {
  return subperiod_relations(all_subperiods(subperiods(s)), s.n);
}

// Numeric n-fold coordinate under the extended convention: the generators
// are cos/sin of 2 pi k / n, so G_ij = sin(2 pi (j - i) / n).
double nfold_coord(std::size_t n, long i, long j) {
  return std::sin(2 * pi * static_cast<double>(j - i) / static_cast<double>(n));
}

}  // namespace

TEST_CASE("number of Plücker relations") {
  CHECK(plucker_relations(4).size() == 1);
  CHECK(plucker_relations(5).size() == 5);
  CHECK(plucker_relations(6).size() == 15);
  CHECK(plucker_relations(7).size() == 35);
  for (const auto& q : plucker_relations(6)) CHECK((q[0] < q[1] && q[1] < q[2] && q[2] < q[3]));
}

TEST_CASE("plucker_polynomial vanishes on planes") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-2, 2);
  for (std::size_t n : {4, 5, 6}) {
    std::vector<double> u(n), v(n);
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    const Grassmann g = grassmann(SlopeSpec::numeric(u, v));
    for (const auto& q : plucker_relations(n)) CHECK(std::abs(plucker_polynomial(n, q).evaluate(g.values)) < 1e-12);
  }
  // (1, 1, 1, 1, 1, 1) is not a plane: 1 - 1 + 1.
  CHECK(plucker_polynomial(4, {0, 1, 2, 3}).evaluate(std::vector<double>(6, 1.0)) == doctest::Approx(1.0));
}

TEST_CASE("coordinate names") {
  CHECK(coordinate_name(4, 0) == "G12");
  CHECK(coordinate_name(4, 5) == "G34");
  CHECK(coordinate_name(12, pair_index(12, 0, 11)) == "G1,12");
}

TEST_CASE("reduce keeps the expected free coordinates") {
  const ReducedForm ab = reduce(relations_of(presets::ammann_beenker()));
  CHECK(ab.free == std::vector<std::size_t>{0, 1, 4});  // G12, G13, G24

  const ReducedForm pen = reduce(relations_of(presets::penrose()));
  CHECK(pen.free == std::vector<std::size_t>{0, 1});  // G12, G13

  LinearRelationSet none;
  none.n = 5;
  const ReducedForm all = reduce(none);
  CHECK(all.free.size() == 10);

  // The expressions reproduce the actual coordinates.
  for (const auto& s : {presets::golden_octagonal(), presets::penrose(), presets::cubic_dodecagonal()}) {
    const ReducedForm f = reduce(relations_of(s));
    const Grassmann g = grassmann(s);
    for (std::size_t k = 0; k < g.exact.size(); ++k) {
      AlgebraicNumber x(s.field);
      for (std::size_t t = 0; t < f.free.size(); ++t)
        x += AlgebraicNumber(s.field, f.expression[k][t]) * g.exact[f.free[t]];
      CHECK(x == g.exact[k]);
    }
  }
}

TEST_CASE("golden octagonal system is zero-dimensional") {
  const ReducedSystem r = classify_codim2(relations_of(presets::golden_octagonal()));
  CHECK(r.dimension == Dimension::zero);
  REQUIRE(r.univariate.has_value());
  CHECK(r.univariate->primitive().coeffs() == RationalPoly{-1, -1, 1}.coeffs());
  REQUIRE(r.solutions.size() == 2);
  for (const auto& g : r.solutions) {
    CHECK(plucker_check(g).empty());
    const LinearRelationSet l = relations_of(presets::golden_octagonal());
    for (const auto& row : l.rows) {
      AlgebraicNumber x(g.exact.front().field());
      for (std::size_t k = 0; k < row.size(); ++k) x += AlgebraicNumber(x.field(), row[k]) * g.exact[k];
      CHECK(x.is_zero());
    }
  }
}

TEST_CASE("Ammann-Beenker system is one-dimensional") {
  const ReducedSystem r = classify_codim2(relations_of(presets::ammann_beenker()));
  CHECK(r.dimension == Dimension::one);
  CHECK(r.pivot == 0);
  REQUIRE(r.distinct.size() == 1);
  // G13 G24 - 2 up to scale, in the variables (G13, G24).
  const MPoly& p = r.distinct[0];
  CHECK(p.evaluate(std::vector<double>{1.0, 2.0}) == doctest::Approx(0.0));
  CHECK(p.evaluate(std::vector<double>{std::sqrt(2.0), std::sqrt(2.0)}) == doctest::Approx(0.0));
  CHECK(p.evaluate(std::vector<double>{1.0, 1.0}) != doctest::Approx(0.0));
  CHECK(p.total_degree() == 2);
}

TEST_CASE("classify_codim2 rejects other dimensions") {
  try {
    classify_codim2(relations_of(presets::penrose()));
    FAIL("expected NotCodimTwo");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_codim_two);
  }
}

TEST_CASE("Penrose relations reduce to one quadratic") {
  const LinearRelationSet l = relations_of(presets::penrose());
  const ReducedSystem r = classify(l);
  CHECK(r.dimension == Dimension::zero);
  const ReducedSystem c = classify_chart(l, 1);  // G13 = 1
  REQUIRE(c.univariate.has_value());
  CHECK(c.univariate->primitive().coeffs() == RationalPoly{-1, -1, 1}.coeffs());
  std::size_t nonzero = 0;
  for (const auto& p : c.residuals)
    if (!p.is_zero()) {
      ++nonzero;
      const auto u = p.univariate(0);
      REQUIRE(u.has_value());
      CHECK(u->primitive().coeffs() == RationalPoly{-1, -1, 1}.coeffs());
    }
  CHECK(nonzero == 5);
  CHECK_THROWS_AS(classify_chart(l, 5), Error);
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_u(0).coeffs() == RationalPoly{1}.coeffs());
  CHECK(chebyshev_u(2).coeffs() == RationalPoly{-1, 0, 4}.coeffs());
  CHECK(chebyshev_u(3).coeffs() == RationalPoly{0, -4, 0, 8}.coeffs());
  // U_i(cos t) sin t = sin((i + 1) t)
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(0.1, 3.0);
  for (int k = 0; k < 20; ++k) {
    const double t = d(rng);
    CHECK(chebyshev_u(5).eval(std::cos(t)) * std::sin(t) == doctest::Approx(std::sin(6 * t)).epsilon(1e-10));
    for (std::size_t i : {1, 4, 7}) {
      // With X = Y the alternating recurrence is the ordinary one.
      CHECK(chebyshev_u_xy(i).evaluate(std::vector<double>{std::cos(t), std::cos(t)}) ==
            doctest::Approx(chebyshev_u(i).eval(std::cos(t))).epsilon(1e-10));
    }
  }
}

TEST_CASE("nfold_system dimensions") {
  for (std::size_t n : {5, 7, 9, 10, 11, 13, 14}) CHECK(nfold_system(n).dimension == 0);
  for (std::size_t n : {8, 12, 16}) {
    const ChebyshevReport r = nfold_system(n);
    CHECK(r.dimension == 1);
    CHECK(r.product_form);
  }
  CHECK_THROWS_AS(nfold_system(3), Error);
}

TEST_CASE("nfold constraints hold at the regular slope") {
  for (std::size_t n : {5, 7, 9, 10, 11, 13, 14}) {
    const ChebyshevReport r = nfold_system(n);
    CHECK(std::abs(r.polynomial.eval(std::cos(2 * pi / static_cast<double>(n)))) < 1e-9);
  }
  const ChebyshevReport eight = nfold_system(8);
  CHECK(eight.constraint == "XY=1/2");
  const double h = std::sqrt(2.0) / 2;
  CHECK(eight.polynomial.eval(h * h) == doctest::Approx(0.0));
  // In the product case U_{m-2}(X, Y) - rhs vanishes on X = Y = cos(2 pi / n).
  for (std::size_t n : {8, 12, 16}) {
    const ChebyshevReport r = nfold_system(n);
    const double c = std::cos(2 * pi / static_cast<double>(n));
    CHECK(r.u_xy.evaluate(std::vector<double>{c, c}) == doctest::Approx(r.rhs.get_d()).epsilon(1e-9));
  }
}

TEST_CASE("nfold identities hold numerically") {
  for (std::size_t n : {5, 7, 8, 12, 24}) {
    for (const auto& id : nfold_system(n).identities)
      CHECK(nfold_coord(n, id.i, id.j) ==
            doctest::Approx(id.factor.get_d() * nfold_coord(n, id.k, id.l)).epsilon(1e-12));
  }
  // Twelvefold: the extra relations G_{i,i+3} = 2 G_{i,i+1} come from sin(pi/6) = 1/2.
  std::size_t doubled = 0;
  for (const auto& id : nfold_system(12).identities) doubled += id.factor == 2;
  CHECK(doubled == 12);
  for (const auto& id : nfold_system(8).identities) CHECK(id.factor == 1);
}

TEST_CASE("nfold_reduce matches the sine formula") {
  for (std::size_t n : {5, 6, 8, 9, 12}) {
    for (long delta = -30; delta <= 30; ++delta) {
      const auto [sign, d] = nfold_reduce(n, delta);
      const long period = static_cast<long>(n % 2 == 1 ? n : n / 2);
      CHECK(d >= 0);
      CHECK(2 * d <= period);
      // Even n uses the half-turn directions, so G(delta) = sin(2 pi delta / n) there as well.
      CHECK(nfold_coord(n, 0, delta) == doctest::Approx(sign * nfold_coord(n, 0, d)).epsilon(1e-12));
    }
  }
}

TEST_CASE("band values determine every coordinate") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-4, 4);
  const FieldPtr f = presets::golden_field();
  int done = 0;
  for (int round = 0; round < 40 && done < 15; ++round) {
    const std::size_t n = 4 + static_cast<std::size_t>(round % 4);
    std::vector<AlgebraicNumber> u, v;
    for (std::size_t k = 0; k < n; ++k) {
      u.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng))});
      v.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng))});
    }
    Grassmann g;
    try {
      g = grassmann(SlopeSpec::exact(f, u, v));
    } catch (const Error&) {
      continue;
    }
    std::vector<AlgebraicNumber> band;
    for (std::size_t i = 0; i + 1 < n; ++i) band.push_back(g.exact_at(i, i + 1));
    for (std::size_t i = 0; i + 2 < n; ++i) band.push_back(g.exact_at(i, i + 2));
    Grassmann h;
    try {
      h = propagate_band(n, band);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::division_by_zero);
      continue;
    }
    for (std::size_t k = 0; k < g.exact.size(); ++k) CHECK(h.exact[k] == g.exact[k]);
    CHECK(plucker_check(h).empty());
    ++done;
  }
  CHECK(done >= 10);
  CHECK_THROWS_AS(propagate_band(5, std::vector<AlgebraicNumber>(3, AlgebraicNumber(f))), Error);
}

TEST_CASE("intersections of lifted slopes") {
  const SlopeSpec pen = presets::penrose();
  std::vector<LiftConstraint> cons;
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < 5; ++k)
      if (k != skip) idx.push_back(k);
    cons.push_back({idx, pen.restrict_to(idx)});
  }
  const Intersection x = intersect_lifted_slopes(5, cons);
  CHECK(x.dimension == 2);
  CHECK(x.basis.size() == 2);

  const SlopeSpec cub = presets::cubic_dodecagonal();
  const std::vector<std::size_t> a{0, 1, 2, 4}, b{0, 3, 4, 5};
  const Intersection y = intersect_lifted_slopes(6, {{a, cub.restrict_to(a)}, {b, cub.restrict_to(b)}});
  CHECK(y.dimension == 2);

  // A projection alone does not pin the remaining coordinates.
  CHECK_THROWS_AS(intersect_lifted_slopes(6, {{a, cub.restrict_to(a)}}), Error);

  // Every basis vector restricts into each plane: it is orthogonal to the normals.
  for (const auto& w : x.basis)
    for (const auto& c : cons) {
      std::vector<AlgebraicNumber> r;
      for (auto k : c.indices) r.push_back(w[k]);
      Matrix<AlgebraicNumber> m{c.slope.u, c.slope.v, r};
      CHECK(rank(m, 4) == 2);
    }
}

TEST_CASE("subperiod relation rendering") {
  const LinearRelationSet l = relations_of(presets::golden_octagonal());
  CHECK(l.rows.size() == 4);
  for (const auto& row : l.rows) CHECK(relation_to_string(row, 4).find('=') != std::string::npos);
}
