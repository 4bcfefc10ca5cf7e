#include "doctest.h"

#include "rhombus/error.hpp"
#include "rhombus/slope.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace rhombus;

namespace {

const double phi = (1 + std::sqrt(5.0)) / 2;

AlgebraicNumber ph() { return AlgebraicNumber::generator(presets::golden_field()); }
AlgebraicNumber q(long a, long b = 1) { return AlgebraicNumber(presets::golden_field(), make_rational(a, b)); }

// u_i v_j - u_j v_i straight from the definition, in doubles.
std::vector<double> minors(const std::vector<double>& u, const std::vector<double>& v) {
  std::vector<double> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) out.push_back(u[i] * v[j] - u[j] * v[i]);
  return out;
}

}  // namespace

TEST_CASE("grassmann of the golden octagonal generators") {
  const SlopeSpec s = SlopeSpec::exact(presets::golden_field(), {q(-1), q(0), ph(), ph()}, {q(0), q(1), ph(), q(1)});
  // Raw minors are -(1, phi, 1, phi, phi, 1); the plane is the same.
  const Grassmann raw = grassmann(s);
  CHECK(raw.exact[0] == q(-1));
  const Grassmann g = raw.normalized();
  const std::vector<AlgebraicNumber> expect{q(1), ph(), q(1), ph(), ph(), q(1)};
  REQUIRE(g.exact.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(g.exact[k] == expect[k]);
}

TEST_CASE("grassmann of the eightfold star is proportional to (1, r2, 1, 1, r2, 1)") {
  std::vector<double> u, v;
  for (int k = 0; k < 4; ++k) {
    u.push_back(std::cos(k * std::numbers::pi / 4));
    v.push_back(std::sin(k * std::numbers::pi / 4));
  }
  const Grassmann g = grassmann(SlopeSpec::numeric(u, v)).normalized();
  const double r2 = std::sqrt(2.0);
  const std::vector<double> expect{1, r2, 1, 1, r2, 1};
  for (std::size_t k = 0; k < 6; ++k) CHECK(g.values[k] == doctest::Approx(expect[k]).epsilon(1e-12));

  const Grassmann ab = grassmann(presets::ammann_beenker()).normalized();
  for (std::size_t k = 0; k < 6; ++k) CHECK(ab.values[k] == doctest::Approx(expect[k]).epsilon(1e-12));
}

TEST_CASE("grassmann of the coordinate plane") {
  const Grassmann g = grassmann(SlopeSpec::numeric({1, 0, 0, 0}, {0, 1, 0, 0}));
  CHECK(g.values == std::vector<double>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("grassmann rejects dependent generators") {
  CHECK_THROWS_AS(grassmann(SlopeSpec::numeric({1, 2, 3, 4}, {2, 4, 6, 8})), Error);
  const SlopeSpec s = SlopeSpec::exact(presets::golden_field(), {q(1), ph(), q(0), q(2)}, {ph(), ph() + q(1), q(0), ph() * q(2)});
  try {
    grassmann(s);
    FAIL("expected DegenerateSlope");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_slope);
  }
}

TEST_CASE("plucker_check examples") {
  const Grassmann golden = Grassmann::from_exact(4, {q(1), ph(), q(1), ph(), ph(), q(1)});
  CHECK(plucker_check(golden).empty());

  const Grassmann family = presets::ammann_beenker_family(AlgebraicNumber(presets::sqrt2_field(), Rational(3)));
  CHECK(plucker_check(family).empty());

  const auto bad = plucker_check(Grassmann::from_numeric(4, {1, 1, 1, 1, 1, 1}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].quad == std::array<std::size_t, 4>{0, 1, 2, 3});
}

TEST_CASE("frequencies examples") {
  // (1, phi, 1, phi, phi, 1) / (3 + 3 phi)
  const Frequencies f = frequencies(grassmann(presets::golden_octagonal()));
  const double total = 3 + 3 * phi;
  const std::vector<double> expect{1 / total, phi / total, 1 / total, phi / total, phi / total, 1 / total};
  for (std::size_t k = 0; k < 6; ++k) CHECK(f.values[k] == doctest::Approx(expect[k]).epsilon(1e-12));
  CHECK(f.values[0] == doctest::Approx(0.1273).epsilon(1e-3));
  CHECK(f.values[1] == doctest::Approx(0.2060).epsilon(1e-3));

  // Squares T13, T24 of Ammann-Beenker: each sqrt2 / (4 + 2 sqrt2).
  const Frequencies ab = frequencies(grassmann(presets::ammann_beenker()));
  const double sq = std::sqrt(2.0) / (4 + 2 * std::sqrt(2.0));
  CHECK(ab.values[1] == doctest::Approx(sq).epsilon(1e-12));
  CHECK(ab.values[4] == doctest::Approx(sq).epsilon(1e-12));
  CHECK(sq == doctest::Approx(0.2071).epsilon(1e-3));

  const Frequencies deg = frequencies(Grassmann::from_numeric(4, {1, 0, 0, 0, 0, 0}));
  CHECK(deg.values == std::vector<double>{1, 0, 0, 0, 0, 0});
  CHECK(deg.degenerate == std::vector<std::size_t>{1, 2, 3, 4, 5});

  CHECK_THROWS_AS(frequencies(Grassmann::from_numeric(4, {0, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("nfold_slope examples") {
  const NfoldSlope five = nfold_slope(5);
  CHECK(five.m == 5);
  CHECK(five.slope.n == 5);
  const std::vector<double> penrose{phi, 1, -1, -phi, phi, 1, -1, phi, 1, phi};
  const double scale = five.coords.values[0] / penrose[0];
  for (std::size_t k = 0; k < 10; ++k) CHECK(five.coords.values[k] == doctest::Approx(scale * penrose[k]).epsilon(1e-12));

  const NfoldSlope eight = nfold_slope(8);
  CHECK(eight.m == 4);
  const Grassmann g8 = eight.coords.normalized();
  const std::vector<double> ab{1, std::sqrt(2.0), 1, 1, std::sqrt(2.0), 1};
  for (std::size_t k = 0; k < 6; ++k) CHECK(g8.values[k] == doctest::Approx(ab[k]).epsilon(1e-12));

  // Coordinates are sin(2(j - i) pi / n) up to scale.
  for (std::size_t n : {5, 6, 7, 9, 12}) {
    const NfoldSlope s = nfold_slope(n);
    const double c = s.coords.values[0] / std::sin(2 * std::numbers::pi / static_cast<double>(n));
    for (std::size_t i = 0; i < s.m; ++i)
      for (std::size_t j = i + 1; j < s.m; ++j)
        CHECK(s.coords.at(i, j) ==
              doctest::Approx(c * std::sin(2.0 * static_cast<double>(j - i) * std::numbers::pi / static_cast<double>(n)))
                  .epsilon(1e-12));
  }

  // n = 4: with all four star directions G13 = sin(pi) vanishes.
  const NfoldSlope four = nfold_slope(4, true);
  CHECK(four.coords.at(0, 2) == doctest::Approx(0.0));
  CHECK(std::find(four.degenerate.begin(), four.degenerate.end(), pair_index(4, 0, 2)) != four.degenerate.end());
}

TEST_CASE("basis change multiplies coordinates by the determinant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  const FieldPtr f = presets::golden_field();
  for (int round = 0; round < 30; ++round) {
    std::vector<AlgebraicNumber> u, v;
    for (int k = 0; k < 5; ++k) {
      u.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng))});
      v.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng))});
    }
    const SlopeSpec s = SlopeSpec::exact(f, u, v);
    Grassmann g;
    try {
      g = grassmann(s);
    } catch (const Error&) {
      continue;
    }
    Rational a(d(rng)), b(d(rng), 3), c(d(rng), 2), e(d(rng));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    e.canonicalize();
    const Rational det = a * e - b * c;
    if (det == 0) continue;
    std::vector<AlgebraicNumber> u2, v2;
    for (int k = 0; k < 5; ++k) {
      u2.push_back(AlgebraicNumber(f, a) * u[k] + AlgebraicNumber(f, b) * v[k]);
      v2.push_back(AlgebraicNumber(f, c) * u[k] + AlgebraicNumber(f, e) * v[k]);
    }
    const Grassmann g2 = grassmann(SlopeSpec::exact(f, u2, v2));
    for (std::size_t k = 0; k < g.exact.size(); ++k) CHECK(g2.exact[k] == AlgebraicNumber(f, det) * g.exact[k]);
    const Grassmann n1 = g.normalized(), n2 = g2.normalized();
    for (std::size_t k = 0; k < g.exact.size(); ++k) CHECK(n1.exact[k] == n2.exact[k]);
  }
}

TEST_CASE("random exact slopes satisfy every Plücker relation") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-7, 7);
  const FieldPtr f = presets::cubic_field();
  int checked = 0;
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 4 + static_cast<std::size_t>(round % 4);
    std::vector<AlgebraicNumber> u, v;
    for (std::size_t k = 0; k < n; ++k) {
      u.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng)), Rational(d(rng), 2)});
      v.emplace_back(f, std::vector<Rational>{Rational(d(rng)), Rational(d(rng), 3), Rational(d(rng))});
    }
    Grassmann g;
    try {
      g = grassmann(SlopeSpec::exact(f, u, v));
    } catch (const Error&) {
      continue;
    }
    CHECK(plucker_check(g).empty());
    // Floating coordinates agree with the defining minors.
    std::vector<double> un, vn;
    for (std::size_t k = 0; k < n; ++k) {
      un.push_back(u[k].to_double());
      vn.push_back(v[k].to_double());
    }
    const auto m = minors(un, vn);
    for (std::size_t k = 0; k < m.size(); ++k) CHECK(g.values[k] == doctest::Approx(m[k]).epsilon(1e-9));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("frequencies sum to one") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int round = 0; round < 50; ++round) {
    std::vector<double> u(6), v(6);
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    const Frequencies f = frequencies(grassmann(SlopeSpec::numeric(u, v)));
    double sum = 0;
    for (double x : f.values) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
  const Frequencies ex = frequencies(grassmann(presets::penrose()));
  AlgebraicNumber total(ex.exact.front().field());
  for (const auto& x : ex.exact) total += x;
  CHECK(total == AlgebraicNumber(total.field(), Rational(1)));
}

TEST_CASE("nfold slopes are planes") {
  for (std::size_t n : {5, 7, 8, 9, 11, 12}) CHECK(plucker_check(nfold_slope(n).coords, 1e-9).empty());
}

TEST_CASE("normalization divides by the first nonzero coordinate") {
  const Grassmann g = Grassmann::from_numeric(4, {0, 2, 4, 6, 8, 10}).normalized();
  CHECK(g.values == std::vector<double>{0, 1, 2, 3, 4, 5});
}
