#include "doctest.h"

#include "rhombus/error.hpp"
#include "rhombus/planarity.hpp"
#include "rhombus/subperiods.hpp"
#include "rhombus/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace rhombus;

namespace {

using P2 = Eigen::Vector2d;

double cross(const P2& o, const P2& a, const P2& b) {
  return (a - o).x() * (b - o).y() - (a - o).y() * (b - o).x();
}

// Andrew's monotone chain; collinear points dropped.
std::vector<P2> hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return a.x() < b.x() - 1e-12 || (std::abs(a.x() - b.x()) <= 1e-12 && a.y() < b.y());
  });
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 1e-12) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<P2> window_hull(const SlopeSpec& s) {
  const ProjectionPair pp = build_projectors(s);
  const Window w = build_window(pp, Eigen::VectorXd::Zero(2));
  std::vector<P2> pts;
  for (const auto& y : w.points) pts.emplace_back(y(0), y(1));
  return hull(pts);
}

Point3 to_point(const IntVector& v) { return {v[0].get_si(), v[1].get_si(), v[2].get_si()}; }

}  // namespace

TEST_CASE("projectors are orthonormal and span the slope") {
  for (const auto& s : {presets::golden_octagonal(), presets::penrose(), presets::cubic_dodecagonal()}) {
    const ProjectionPair pp = build_projectors(s);
    Eigen::MatrixXd all(static_cast<Eigen::Index>(s.n), static_cast<Eigen::Index>(s.n));
    all.topRows(2) = pp.basis_e;
    all.bottomRows(static_cast<Eigen::Index>(s.n - 2)) = pp.basis_perp;
    CHECK((all * all.transpose() - Eigen::MatrixXd::Identity(all.rows(), all.rows())).norm() < 1e-12);
    Eigen::VectorXd u(static_cast<Eigen::Index>(s.n));
    for (std::size_t k = 0; k < s.n; ++k) u(static_cast<Eigen::Index>(k)) = s.u_num[k];
    CHECK(pp.to_perp(u).norm() < 1e-12);
  }
}

TEST_CASE("Ammann-Beenker window is a regular octagon") {
  const auto h = window_hull(presets::ammann_beenker());
  REQUIRE(h.size() == 8);
  P2 c = P2::Zero();
  for (const auto& p : h) c += p / 8.0;
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK((h[k] - c).norm() == doctest::Approx((h[0] - c).norm()).epsilon(1e-9));
    CHECK((h[(k + 1) % 8] - h[k]).norm() == doctest::Approx((h[1] - h[0]).norm()).epsilon(1e-9));
  }
  const Window w = build_window(build_projectors(presets::ammann_beenker()), Eigen::VectorXd::Zero(2));
  CHECK(w.facets.size() == 8);
  CHECK(w.contains(w.center()));
}

TEST_CASE("golden octagonal window has eight vertices") {
  CHECK(window_hull(presets::golden_octagonal()).size() == 8);
}

TEST_CASE("window of the coordinate plane is the unit square") {
  const SlopeSpec s = SlopeSpec::numeric({1, 0, 0, 0}, {0, 1, 0, 0});
  const auto h = window_hull(s);
  REQUIRE(h.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK((h[(k + 1) % 4] - h[k]).norm() == doctest::Approx(1.0));
  CHECK((h[2] - h[0]).norm() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("facet slack agrees with the hull") {
  const SlopeSpec s = presets::golden_octagonal();
  const ProjectionPair pp = build_projectors(s);
  const Window w = build_window(pp, Eigen::VectorXd::Zero(2));
  const auto h = window_hull(s);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int k = 0; k < 500; ++k) {
    const P2 y(d(rng), d(rng));
    bool inside = true;
    for (std::size_t i = 0; i < h.size(); ++i) inside = inside && cross(h[i], h[(i + 1) % h.size()], y) > 0;
    Eigen::VectorXd yy(2);
    yy << y.x(), y.y();
    CHECK(inside == (w.slack(yy) > 0));
  }
}

TEST_CASE("golden octagonal patch frequencies approach the exact ones") {
  const SlopeSpec s = presets::golden_octagonal();
  const auto exact = frequencies(grassmann(s)).values;
  double last = 1;
  for (double R : {10.0, 20.0, 40.0}) {
    const Patch p = generate_patch(s, R);
    const auto f = empirical_frequencies(p);
    double err = 0;
    for (std::size_t k = 0; k < f.size(); ++k) err = std::max(err, std::abs(f[k] - exact[k]));
    last = err;
  }
  CHECK(last < 0.02);
}

TEST_CASE("Ammann-Beenker patch is non-degenerate") {
  const Patch p = generate_patch(presets::ammann_beenker(), 20);
  CHECK(p.missing.empty());
  std::set<std::pair<std::size_t, std::size_t>> types;
  for (const auto& t : p.tiles) types.insert({t.i, t.j});
  CHECK(types.size() == 6);
  // Squares together: 2 sqrt2 / (4 + 2 sqrt2).
  const auto f = empirical_frequencies(generate_patch(presets::ammann_beenker(), 30));
  CHECK(f[1] + f[4] == doctest::Approx(2 * std::sqrt(2.0) / (4 + 2 * std::sqrt(2.0))).epsilon(0.02));
}

TEST_CASE("rational slope yields a flagged degenerate patch") {
  Eigen::VectorXd off(2);
  off << -0.371, -0.529;
  const Patch p = generate_patch(SlopeSpec::numeric({1, 0, 0, 0}, {0, 1, 0, 0}), off, 5);
  CHECK(p.missing.size() == 5);
  for (const auto& t : p.tiles) CHECK((t.i == 0 && t.j == 1));
}

TEST_CASE("patch invariants") {
  const Patch p = generate_patch(presets::penrose(), 12);
  const std::set<LatticePoint> verts(p.vertices.begin(), p.vertices.end());
  for (const auto& t : p.tiles) {
    LatticePoint x = t.anchor;
    CHECK(verts.count(x));
    ++x[t.i];
    CHECK(verts.count(x));
    ++x[t.j];
    CHECK(verts.count(x));
    --x[t.i];
    CHECK(verts.count(x));
  }
  // Edge-to-edge: every tile edge is shared by at most two tiles.
  std::map<std::pair<LatticePoint, std::size_t>, int> edges;
  for (const auto& t : p.tiles) {
    LatticePoint a = t.anchor, b = t.anchor;
    ++a[t.j];
    ++b[t.i];
    edges[{t.anchor, t.i}]++;
    edges[{t.anchor, t.j}]++;
    edges[{a, t.i}]++;
    edges[{b, t.j}]++;
  }
  for (const auto& [e, c] : edges) CHECK(c <= 2);
  // Deterministic for a fixed seed.
  const Patch q = generate_patch(presets::penrose(), 12);
  CHECK(q.tiles == p.tiles);
  CHECK(q.offset == p.offset);
}

TEST_CASE("window boundary hits raise SingularOffset") {
  const SlopeSpec s = presets::golden_octagonal();
  // The origin projects onto a window vertex when the offset is zero.
  try {
    generate_patch(s, Eigen::VectorXd::Zero(2), 5);
    FAIL("expected SingularOffset");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::singular_offset);
  }
}

TEST_CASE("shadow of the golden octagonal patch") {
  const Patch p = generate_patch(presets::golden_octagonal(), 20);
  const Shadow sh123 = shadow(p, {0, 1, 2});
  CHECK(empirical_period(sh123, {1, 1, 0}));
  const Shadow sh124 = shadow(p, {0, 1, 3});
  CHECK(empirical_period(sh124, {0, 1, 1}));
  CHECK_FALSE(empirical_period(sh124, {1, 0, 0}));
  CHECK(empirical_period(sh124, {0, 2, 2}));
  CHECK(empirical_period(sh124, {0, -1, -1}));
}

TEST_CASE("shadow onto the only three coordinates is the lift") {
  const Patch p = generate_patch(SlopeSpec::numeric({1, 0.3, -0.7}, {0.2, 1, 0.5}), Eigen::VectorXd::Constant(1, 0.123), 6);
  const Shadow sh = shadow(p, {0, 1, 2});
  CHECK(sh.points.size() == p.vertices.size());
  for (const auto& x : p.vertices) CHECK(sh.points.count(Point3{x[0], x[1], x[2]}));
}

TEST_CASE("predicted subperiods are empirical periods") {
  for (const auto& s : {presets::golden_octagonal(), presets::ammann_beenker(), presets::penrose()}) {
    const Patch p = generate_patch(s, 20);
    for (const auto& sh : subperiods(s)) {
      const Shadow proj = shadow(p, sh.indices);
      for (const auto& sp : sh.periods) CHECK(empirical_period(proj, to_point(sp.vector)));
    }
  }
}

TEST_CASE("tiny patches cannot confirm periods") {
  const Patch p = generate_patch(presets::golden_octagonal(), 0.5);
  CHECK_THROWS_AS(empirical_period(shadow(p, {0, 1, 3}), {0, 5, 5}), Error);
}

TEST_CASE("canonical patches are strongly planar") {
  for (const auto& s : {presets::golden_octagonal(), presets::ammann_beenker()}) {
    const ThicknessReport r = thickness(lift_cloud(generate_patch(s, 15)), s, true);
    CHECK(r.raw <= 1 + 1e-6);
    CHECK(r.t >= 1 - 1e-6);
    CHECK(r.t <= 1 + 1e-6);
  }
}
