#include "rhombus/planarity.hpp"

#include "rhombus/error.hpp"
#include "rhombus/lp.hpp"

#include <cmath>
#include <set>

namespace rhombus {

LiftCloud lift_cloud(const Patch& p) {
  LiftCloud c;
  c.n = p.n;
  for (const auto& x : p.vertices) c.points.push_back(to_eigen(x));
  return c;
}

SlopeFit estimate_slope(const LiftCloud& c) {
  if (c.points.size() < 3) throw Error(Errc::rank_deficient, "need at least three points");
  const auto n = static_cast<Eigen::Index>(c.n);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  for (const auto& p : c.points) mean += p;
  mean /= static_cast<double>(c.points.size());
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : c.points) {
    const Eigen::VectorXd d = p - mean;
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(c.points.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  const auto& ev = eig.eigenvalues();  // ascending
  if (ev(n - 1) <= 0 || ev(n - 2) <= 1e-12 * ev(n - 1))
    throw Error(Errc::rank_deficient, "points do not span a plane");
  SlopeFit fit;
  fit.centroid = mean;
  fit.basis.resize(2, n);
  fit.basis.row(0) = eig.eigenvectors().col(n - 1).transpose();
  fit.basis.row(1) = eig.eigenvectors().col(n - 2).transpose();
  std::vector<double> u, v;
  for (Eigen::Index k = 0; k < n; ++k) {
    u.push_back(fit.basis(0, k));
    v.push_back(fit.basis(1, k));
  }
  fit.slope = grassmann(SlopeSpec::numeric(u, v)).normalized();
  double rest = 0.0;
  for (Eigen::Index k = 0; k + 2 < n; ++k) rest += std::max(0.0, ev(k));
  fit.residual = std::sqrt(rest);
  return fit;
}

ThicknessReport thickness(const LiftCloud& c, const SlopeSpec& s, bool tiling_lift) {
  if (c.points.empty()) throw Error(Errc::invalid_argument, "empty cloud");
  if (c.n != s.n) throw Error(Errc::invalid_argument, "cloud and slope dimensions differ");
  const ProjectionPair pp = build_projectors(s);
  std::vector<Eigen::VectorXd> gens;
  for (std::size_t k = 0; k < s.n; ++k) gens.push_back(pp.basis_perp.col(static_cast<Eigen::Index>(k)));
  const std::vector<Facet> facets = zonotope_facets(gens);
  const auto d = static_cast<Eigen::Index>(s.n - 2);

  // y in t W + o  <=>  a_f . (y - o) <= t h_f  for every facet; only the
  // extreme point per facet matters.
  std::vector<double> top(facets.size(), -std::numeric_limits<double>::infinity());
  for (const auto& x : c.points) {
    const Eigen::VectorXd y = pp.to_perp(x);
    for (std::size_t f = 0; f < facets.size(); ++f) top[f] = std::max(top[f], facets[f].normal.dot(y));
  }
  const auto nf = static_cast<Eigen::Index>(facets.size());
  Eigen::MatrixXd a(nf, d + 1);
  Eigen::VectorXd b(nf);
  for (Eigen::Index f = 0; f < nf; ++f) {
    const auto& fc = facets[static_cast<std::size_t>(f)];
    a.row(f).head(d) = -fc.normal.transpose();
    a(f, d) = -fc.support;
    b(f) = -top[static_cast<std::size_t>(f)];
  }
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(d + 1);
  cost(d) = 1.0;
  const LpResult lp = minimize(cost, a, b);
  if (!lp.feasible || !lp.bounded) throw Error(Errc::degenerate_slope, "tube program has no optimum");
  ThicknessReport r;
  r.raw = std::max(0.0, lp.value);
  r.tiling = tiling_lift;
  r.t = tiling_lift ? std::max(1.0, r.raw) : r.raw;
  r.offset = lp.x.head(d);
  try {
    r.fitted = estimate_slope(c).slope;
  } catch (const Error&) {
  }
  return r;
}

double SurfaceFunction::operator()(double x) const {
  switch (kind) {
    case Kind::zero: return 0.0;
    case Kind::linear: return scale * x;
    case Kind::cubic: return scale * x * x * x;
    case Kind::staircase: return std::floor(x * x * x / divisor) - x;
  }
  return 0.0;
}

SurfaceFunction SurfaceFunction::parse(const std::string& name) {
  SurfaceFunction f;
  if (name == "zero") f.kind = Kind::zero;
  else if (name == "linear") f.kind = Kind::linear;
  else if (name == "cubic") f.kind = Kind::cubic;
  else if (name == "staircase") f.kind = Kind::staircase;
  else throw Error(Errc::invalid_argument, "unknown surface function '" + name + "'");
  return f;
}

std::string SurfaceFunction::name() const {
  switch (kind) {
    case Kind::zero: return "zero";
    case Kind::linear: return "linear";
    case Kind::cubic: return "cubic";
    case Kind::staircase: return "staircase";
  }
  return "zero";
}

namespace {

Eigen::VectorXd numeric(const std::vector<AlgebraicNumber>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) out(static_cast<Eigen::Index>(k)) = v[k].to_double();
  return out;
}

// Sign of a sum of products of interval enclosures, refined until it
// excludes zero; 0 when it still straddles at the finest width.
int certified_sign(const std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>>& products,
                   const std::vector<int>& signs) {
  for (int bits = 32; bits <= 512; bits *= 2) {
    Rational w(1);
    w /= Rational(Integer(1) << bits);
    Interval acc{0, 0};
    for (std::size_t k = 0; k < products.size(); ++k) {
      Interval term = products[k].first.enclosure(w) * products[k].second.enclosure(w);
      acc = signs[k] > 0 ? acc + term : acc - term;
    }
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
  }
  return 0;
}

}  // namespace

bool slopes_intersect(const SlopeSpec& a, const SlopeSpec& b) {
  if (a.n != b.n) throw Error(Errc::invalid_argument, "slopes live in different dimensions");
  if (a.n == 4 && a.is_exact() && b.is_exact()) {
    const Grassmann ga = grassmann(a), gb = grassmann(b);
    const auto A = [&](std::size_t i, std::size_t j) { return ga.exact_at(i - 1, j - 1); };
    const auto B = [&](std::size_t i, std::size_t j) { return gb.exact_at(i - 1, j - 1); };
    // A12B34 - A13B24 + A23B14 + B12A34 - B13A24 + B23A14 vanishes iff the planes meet.
    const std::vector<std::pair<AlgebraicNumber, AlgebraicNumber>> products{
        {A(1, 2), B(3, 4)}, {A(1, 3), B(2, 4)}, {A(2, 3), B(1, 4)},
        {B(1, 2), A(3, 4)}, {B(1, 3), A(2, 4)}, {B(2, 3), A(1, 4)}};
    return certified_sign(products, {1, -1, 1, 1, -1, 1}) == 0;
  }
  const ProjectionPair pa = build_projectors(a), pb = build_projectors(b);
  Eigen::MatrixXd m(4, static_cast<Eigen::Index>(a.n));
  m.topRows(2) = pa.basis_e;
  m.bottomRows(2) = pb.basis_e;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(3) < 1e-9;
}

SlopeSpec conjugate_slope(const SlopeSpec& s, std::size_t root_index) {
  if (!s.is_exact()) throw Error(Errc::invalid_argument, "conjugation needs an exact slope");
  const FieldPtr& field = s.field;
  std::vector<FieldPtr> others;
  if (field->degree() >= 2) {
    for (const auto& iv : real_roots(field->minpoly())) {
      FieldPtr candidate = field->retarget(iv.lo, iv.hi);
      if (!candidate->same_as(*field)) others.push_back(candidate);
    }
  }
  if (others.empty()) throw Error(Errc::no_other_real_root, "the minimal polynomial has no other real root");
  if (root_index >= others.size())
    throw Error(Errc::invalid_argument, "root index " + std::to_string(root_index) + " out of range (" +
                                            std::to_string(others.size()) + " conjugates)");
  const FieldPtr target = others[root_index];
  const auto move = [&](const std::vector<AlgebraicNumber>& xs) {
    std::vector<AlgebraicNumber> out;
    for (const auto& x : xs)
      out.push_back(x.field()->degree() == 1 && x.is_rational() && !x.field()->same_as(*field)
                        ? x
                        : AlgebraicNumber(target, x.coeffs()));
    return out;
  };
  return SlopeSpec::exact(target, move(s.u), move(s.v));
}

LevitovSurface levitov_surface(const SlopeSpec& e, const SlopeSpec& e_prime, SurfaceFunction f, SurfaceFunction g,
                               double radius, double step) {
  if (!(radius > 0) || !(step > 0)) throw Error(Errc::invalid_argument, "radius and step must be positive");
  if (e.n != e_prime.n) throw Error(Errc::invalid_argument, "slopes live in different dimensions");
  if (slopes_intersect(e, e_prime)) throw Error(Errc::slopes_intersect, "E and E' share a nonzero vector");

  // Two subperiods of E whose lifts are not collinear.
  std::vector<SubperiodLift> lifts;
  for (const auto& sh : subperiods(e)) {
    if (sh.count() == 0 || sh.degenerate()) continue;
    try {
      lifts.push_back(lift_subperiod(e, sh.periods.front()));
    } catch (const Error&) {
    }
  }
  const SubperiodLift* a = nullptr;
  const SubperiodLift* b = nullptr;
  for (std::size_t x = 0; x < lifts.size() && !a; ++x)
    for (std::size_t y = x + 1; y < lifts.size(); ++y)
      if (!(lifts[x].lambda * lifts[y].mu - lifts[x].mu * lifts[y].lambda).is_zero()) {
        a = &lifts[x];
        b = &lifts[y];
        break;
      }
  if (!a) throw Error(Errc::invalid_argument, "the slope needs two subperiods with non-collinear lifts");

  LevitovSurface out;
  out.p1 = a->subperiod;
  out.p2 = b->subperiod;
  out.q1 = numeric(a->vector);
  out.q2 = numeric(b->vector);
  out.r1 = numeric(lift_subperiod(e_prime, out.p1).vector);
  out.r2 = numeric(lift_subperiod(e_prime, out.p2).vector);
  out.radius = radius;
  out.step = step;
  // Steps of x^3 over one grid cell stay below the divisor.
  const double jump = 3 * radius * radius * step + 3 * radius * step * step + step * step * step;
  for (auto* fn : {&f, &g})
    if (fn->kind == SurfaceFunction::Kind::staircase && fn->divisor <= 0) fn->divisor = std::ceil(jump);
  out.f = f;
  out.g = g;
  out.cloud.n = e.n;
  const long steps = static_cast<long>(std::floor(radius / step + 1e-9));
  for (long i = -steps; i <= steps; ++i)
    for (long j = -steps; j <= steps; ++j) {
      const double lambda = static_cast<double>(i) * step, mu = static_cast<double>(j) * step;
      out.cloud.points.push_back(lambda * out.q1 + mu * out.q2 + f(lambda) * out.r1 + g(mu) * out.r2);
    }
  return out;
}

PeriodicityCheck check_shadow_period(const LiftCloud& c, const Triple& indices, const IntVector& p, double tol) {
  using Key = std::array<long long, 3>;
  const auto key = [&](const Eigen::Vector3d& y) {
    return Key{std::llround(y(0) / tol), std::llround(y(1) / tol), std::llround(y(2) / tol)};
  };
  std::set<Key> keys;
  std::vector<Eigen::Vector3d> shadow;
  for (const auto& x : c.points) {
    Eigen::Vector3d y(x(static_cast<Eigen::Index>(indices[0])), x(static_cast<Eigen::Index>(indices[1])),
                      x(static_cast<Eigen::Index>(indices[2])));
    shadow.push_back(y);
    keys.insert(key(y));
  }
  const auto present = [&](const Eigen::Vector3d& y) {
    const Key k = key(y);
    for (long long a = -1; a <= 1; ++a)
      for (long long b = -1; b <= 1; ++b)
        for (long long d = -1; d <= 1; ++d)
          if (keys.count(Key{k[0] + a, k[1] + b, k[2] + d})) return true;
    return false;
  };
  const Eigen::Vector3d shift(p[0].get_d(), p[1].get_d(), p[2].get_d());
  PeriodicityCheck out;
  for (const auto& y : shadow) {
    ++out.considered;
    if (present(y + shift)) {
      ++out.matched;
      continue;
    }
    for (int k = 2; k <= 4; ++k)
      if (present(y + k * shift)) {
        ++out.violations;
        break;
      }
  }
  out.periodic = out.violations == 0 && 2 * out.matched >= out.considered;
  return out;
}

}  // namespace rhombus
