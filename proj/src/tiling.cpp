#include "rhombus/tiling.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <unordered_set>

namespace rhombus {

namespace {

struct PointHash {
  std::size_t operator()(const LatticePoint& x) const {
    std::size_t h = 1469598103934665603ULL;
    for (long c : x) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h;
  }
};

// Visits every (d-1)-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::vector<Eigen::Vector2d> ProjectionPair::tile_vectors() const {
  std::vector<Eigen::Vector2d> out;
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Vector2d v = basis_e.col(static_cast<Eigen::Index>(k));
    const double len = v.norm();
    out.push_back(len > 1e-12 ? Eigen::Vector2d(v / len) : Eigen::Vector2d::Zero());
  }
  return out;
}

ProjectionPair build_projectors(const SlopeSpec& s) {
  grassmann(s);  // throws DegenerateSlope
  const auto n = static_cast<Eigen::Index>(s.n);
  Eigen::VectorXd u = Eigen::Map<const Eigen::VectorXd>(s.u_num.data(), n);
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(s.v_num.data(), n);
  const Eigen::VectorXd e1 = u.normalized();
  Eigen::VectorXd w = v - v.dot(e1) * e1;
  if (w.norm() < 1e-12 * v.norm()) throw Error(Errc::degenerate_slope, "generators are numerically collinear");
  const Eigen::VectorXd e2 = w.normalized();

  ProjectionPair pp;
  pp.n = s.n;
  pp.basis_e.resize(2, n);
  pp.basis_e.row(0) = e1.transpose();
  pp.basis_e.row(1) = e2.transpose();
  Eigen::MatrixXd frame(n, 2);
  frame.col(0) = e1;
  frame.col(1) = e2;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(frame);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  pp.basis_perp = q.rightCols(n - 2).transpose();
  return pp;
}

Eigen::VectorXd to_eigen(const LatticePoint& x) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) out(static_cast<Eigen::Index>(k)) = static_cast<double>(x[k]);
  return out;
}

std::vector<Facet> zonotope_facets(const std::vector<Eigen::VectorXd>& generators) {
  std::vector<Facet> out;
  if (generators.empty()) return out;
  const auto d = generators.front().size();
  const auto support = [&](const Eigen::VectorXd& a) {
    double h = 0.0;
    for (const auto& g : generators) h += std::max(0.0, a.dot(g));
    return h;
  };
  std::vector<Eigen::VectorXd> normals;
  if (d == 1) {
    normals.push_back(Eigen::VectorXd::Constant(1, 1.0));
  } else {
    for_each_subset(generators.size(), static_cast<std::size_t>(d - 1), [&](const std::vector<std::size_t>& idx) {
      Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), d);
      for (std::size_t r = 0; r < idx.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = generators[idx[r]].transpose();
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
      const auto& sv = svd.singularValues();
      if (sv.size() < d - 1 || sv(d - 2) < 1e-10 * std::max(1.0, sv(0))) return;
      Eigen::VectorXd a = svd.matrixV().col(d - 1);
      // Canonical sign: first significant entry positive.
      for (Eigen::Index k = 0; k < d; ++k)
        if (std::abs(a(k)) > 1e-9) {
          if (a(k) < 0) a = -a;
          break;
        }
      for (const auto& b : normals)
        if ((a - b).norm() < 1e-9) return;
      normals.push_back(a);
    });
  }
  for (const auto& a : normals) {
    out.push_back({a, support(a)});
    out.push_back({-a, support(-a)});
  }
  return out;
}

Eigen::VectorXd Window::center() const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& g : generators) c += 0.5 * g;
  return c + offset;
}

double Window::slack(const Eigen::VectorXd& y) const {
  double best = std::numeric_limits<double>::infinity();
  const Eigen::VectorXd z = y - offset;
  for (const auto& f : facets) best = std::min(best, f.support - f.normal.dot(z));
  return best;
}

Window build_window(const ProjectionPair& pp, const Eigen::VectorXd& offset) {
  Window w;
  w.dim = pp.n - 2;
  if (static_cast<std::size_t>(offset.size()) != w.dim)
    throw Error(Errc::invalid_argument, "offset must have dimension n-2");
  w.offset = offset;
  for (std::size_t k = 0; k < pp.n; ++k) w.generators.push_back(pp.basis_perp.col(static_cast<Eigen::Index>(k)));
  if (pp.n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << pp.n); ++mask) {
      Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(w.dim));
      for (std::size_t k = 0; k < pp.n; ++k)
        if (mask >> k & 1U) p += w.generators[k];
      w.points.push_back(p);
    }
  }
  w.facets = zonotope_facets(w.generators);
  return w;
}

Eigen::VectorXd default_offset(const ProjectionPair& pp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd c(static_cast<Eigen::Index>(pp.n));
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = unit(rng);
  return pp.to_perp(c);
}

Patch generate_patch(const SlopeSpec& s, double radius, std::uint64_t seed) {
  const ProjectionPair pp = build_projectors(s);
  Patch p = generate_patch(s, default_offset(pp, seed), radius);
  p.seed = seed;
  return p;
}

Patch generate_patch(const SlopeSpec& s, const Eigen::VectorXd& offset, double radius) {
  if (!(radius > 0)) throw Error(Errc::invalid_argument, "radius must be positive");
  const ProjectionPair pp = build_projectors(s);
  const Window w = build_window(pp, offset);
  const std::size_t n = s.n;
  const double keep = radius + kPatchMargin;
  const double explore = keep + 2.0;

  const auto selected = [&](const LatticePoint& x) {
    const double sl = w.slack(pp.to_perp(to_eigen(x)));
    if (std::abs(sl) <= kBoundaryTolerance)
      throw Error(Errc::singular_offset, "a lattice point projects onto the window boundary; choose another offset");
    return sl > 0;
  };

  // Seed: ceil of the lift of the offset lies in offset + [0,1)^n.
  const Eigen::VectorXd lifted = pp.basis_perp.transpose() * offset;
  LatticePoint start(n);
  for (std::size_t k = 0; k < n; ++k) start[k] = static_cast<long>(std::ceil(lifted(static_cast<Eigen::Index>(k))));
  if (!selected(start)) throw Error(Errc::singular_offset, "seed point is not selected");

  std::unordered_set<LatticePoint, PointHash> seen{start};
  std::deque<LatticePoint> queue{start};
  std::vector<LatticePoint> found;
  while (!queue.empty()) {
    LatticePoint x = std::move(queue.front());
    queue.pop_front();
    if (pp.to_plane(to_eigen(x)).norm() <= keep) found.push_back(x);
    for (std::size_t k = 0; k < n; ++k)
      for (long step : {1L, -1L}) {
        LatticePoint y = x;
        y[k] += step;
        if (seen.count(y)) continue;
        if (pp.to_plane(to_eigen(y)).norm() > explore) continue;
        seen.insert(y);
        if (selected(y)) queue.push_back(std::move(y));
      }
  }
  std::sort(found.begin(), found.end());

  Patch p;
  p.n = n;
  p.slope = s;
  p.offset = offset;
  p.radius = radius;
  p.vertices = found;
  const auto has = [&](const LatticePoint& x) { return std::binary_search(found.begin(), found.end(), x); };
  std::vector<bool> present(pair_count(n), false);
  for (const auto& x : found)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        LatticePoint a = x, b = x, c = x;
        a[i] += 1;
        b[j] += 1;
        c[i] += 1;
        c[j] += 1;
        if (has(a) && has(b) && has(c)) {
          p.tiles.push_back({x, i, j});
          present[pair_index(n, i, j)] = true;
        }
      }
  std::sort(p.tiles.begin(), p.tiles.end());
  for (std::size_t k = 0; k < present.size(); ++k)
    if (!present[k]) p.missing.push_back(k);
  return p;
}

Eigen::Vector2d tiling_position(const std::vector<Eigen::Vector2d>& edges, const LatticePoint& x) {
  Eigen::Vector2d out = Eigen::Vector2d::Zero();
  for (std::size_t k = 0; k < x.size(); ++k) out += static_cast<double>(x[k]) * edges[k];
  return out;
}

Shadow shadow(const Patch& p, std::array<std::size_t, 3> indices) {
  auto [i, j, k] = indices;
  if (i == j || j == k || i == k || std::max({i, j, k}) >= p.n)
    throw Error(Errc::invalid_argument, "shadow needs three distinct indices below n");
  const ProjectionPair pp = build_projectors(p.slope);
  Shadow sh;
  sh.n = p.n;
  sh.indices = indices;
  sh.radius = p.radius;
  for (std::size_t r = 0; r < 3; ++r) sh.plane_map.row(static_cast<Eigen::Index>(r)) = pp.basis_e.col(static_cast<Eigen::Index>(indices[r])).transpose();
  const auto project = [&](const LatticePoint& x) { return Point3{x[i], x[j], x[k]}; };
  for (const auto& x : p.vertices) {
    sh.points.insert(project(x));
    sh.samples.emplace_back(project(x), pp.to_plane(to_eigen(x)));
  }
  std::set<std::pair<Point3, std::array<std::size_t, 2>>> faces;
  for (const auto& t : p.tiles) {
    auto a = std::find(indices.begin(), indices.end(), t.i);
    auto b = std::find(indices.begin(), indices.end(), t.j);
    if (a == indices.end() || b == indices.end()) continue;
    std::array<std::size_t, 2> local{static_cast<std::size_t>(a - indices.begin()), static_cast<std::size_t>(b - indices.begin())};
    std::sort(local.begin(), local.end());
    faces.insert({project(t.anchor), local});
  }
  sh.faces.assign(faces.begin(), faces.end());
  return sh;
}

bool empirical_period(const Shadow& sh, const Point3& v) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw Error(Errc::invalid_argument, "period vector must be nonzero");
  const Eigen::Vector3d target(static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2]));
  // Lift of v into E through the shadow map; a vector outside the projected
  // plane can never be a period of a surface that stays near that plane.
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(sh.plane_map, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smin = svd.singularValues()(1);
  if (smin < 1e-9) throw Error(Errc::non_unique, "the slope projects degenerately onto this shadow");
  const Eigen::Vector2d c = svd.solve(target);
  if ((sh.plane_map * c - target).norm() > 1e-6 * target.norm()) return false;
  // Two tube points differ by e + d with e in E and d in [-1,1]^n, so any
  // preimage of y + v lies within this distance of the preimage of y.
  const double margin = c.norm() + std::sqrt(3.0) / smin + std::sqrt(static_cast<double>(sh.n));
  const double inner = sh.radius - margin;
  bool any = false;
  for (const auto& [y, pos] : sh.samples) {
    if (pos.norm() > inner) continue;
    any = true;
    if (!sh.points.count(Point3{y[0] + v[0], y[1] + v[1], y[2] + v[2]})) return false;
  }
  if (!any) throw Error(Errc::patch_too_small, "no vertex lies far enough inside the patch for this period");
  return true;
}

std::vector<double> empirical_frequencies(const Patch& p) {
  std::vector<double> out(pair_count(p.n), 0.0);
  if (p.tiles.empty()) throw Error(Errc::invalid_argument, "patch has no tiles");
  for (const auto& t : p.tiles) out[pair_index(p.n, t.i, t.j)] += 1.0;
  for (auto& f : out) f /= static_cast<double>(p.tiles.size());
  return out;
}

}  // namespace rhombus
