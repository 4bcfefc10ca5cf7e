#include "rhombus/slope.hpp"

#include "rhombus/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rhombus {

SlopeSpec SlopeSpec::exact(FieldPtr field, std::vector<AlgebraicNumber> u, std::vector<AlgebraicNumber> v) {
  if (u.size() != v.size()) throw Error(Errc::invalid_argument, "generators have different lengths");
  if (u.size() < 2) throw Error(Errc::invalid_argument, "a slope needs n >= 2");
  SlopeSpec s;
  s.n = u.size();
  s.mode = Mode::exact;
  s.field = std::move(field);
  for (std::size_t i = 0; i < s.n; ++i) {
    // Promote rational entries into the slope's field so all coordinates agree.
    s.field = common_field(s.field, u[i].field());
    s.field = common_field(s.field, v[i].field());
  }
  for (std::size_t i = 0; i < s.n; ++i) {
    s.u_num.push_back(u[i].to_double());
    s.v_num.push_back(v[i].to_double());
  }
  s.u = std::move(u);
  s.v = std::move(v);
  return s;
}

SlopeSpec SlopeSpec::numeric(std::vector<double> u, std::vector<double> v) {
  if (u.size() != v.size()) throw Error(Errc::invalid_argument, "generators have different lengths");
  if (u.size() < 2) throw Error(Errc::invalid_argument, "a slope needs n >= 2");
  SlopeSpec s;
  s.n = u.size();
  s.mode = Mode::numeric;
  s.u_num = std::move(u);
  s.v_num = std::move(v);
  return s;
}

SlopeSpec SlopeSpec::restrict_to(const std::vector<std::size_t>& indices) const {
  for (auto i : indices)
    if (i >= n) throw Error(Errc::invalid_argument, "restriction index out of range");
  if (is_exact()) {
    std::vector<AlgebraicNumber> ru, rv;
    for (auto i : indices) {
      ru.push_back(u[i]);
      rv.push_back(v[i]);
    }
    return exact(field, std::move(ru), std::move(rv));
  }
  std::vector<double> ru, rv;
  for (auto i : indices) {
    ru.push_back(u_num[i]);
    rv.push_back(v_num[i]);
  }
  return numeric(std::move(ru), std::move(rv));
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

Grassmann Grassmann::from_exact(std::size_t n, std::vector<AlgebraicNumber> coords) {
  if (coords.size() != pair_count(n)) throw Error(Errc::invalid_argument, "wrong number of Grassmann coordinates");
  Grassmann g;
  g.n = n;
  for (const auto& c : coords) g.values.push_back(c.to_double());
  g.exact = std::move(coords);
  return g;
}

Grassmann Grassmann::from_numeric(std::size_t n, std::vector<double> coords) {
  if (coords.size() != pair_count(n)) throw Error(Errc::invalid_argument, "wrong number of Grassmann coordinates");
  Grassmann g;
  g.n = n;
  g.values = std::move(coords);
  return g;
}

double Grassmann::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return i < j ? values[pair_index(n, i, j)] : -values[pair_index(n, j, i)];
}

AlgebraicNumber Grassmann::exact_at(std::size_t i, std::size_t j) const {
  if (!is_exact()) throw Error(Errc::invalid_argument, "numeric Grassmann coordinates have no exact value");
  if (i == j) return AlgebraicNumber(exact.front().field());
  return i < j ? exact[pair_index(n, i, j)] : -exact[pair_index(n, j, i)];
}

Grassmann Grassmann::normalized() const {
  if (is_exact()) {
    auto it = std::find_if(exact.begin(), exact.end(), [](const AlgebraicNumber& a) { return !a.is_zero(); });
    if (it == exact.end()) throw Error(Errc::all_zero, "all Grassmann coordinates vanish");
    const AlgebraicNumber inv = it->inverse();
    std::vector<AlgebraicNumber> out;
    for (const auto& c : exact) out.push_back(c * inv);
    return from_exact(n, std::move(out));
  }
  double top = 0.0;
  for (double c : values) top = std::max(top, std::abs(c));
  double scale = 0.0;
  for (double c : values) {
    // Coordinates below 1e-12 of the largest count as zero.
    if (std::abs(c) > 1e-12 * top) {
      scale = c;
      break;
    }
  }
  if (scale == 0.0) throw Error(Errc::all_zero, "all Grassmann coordinates vanish");
  std::vector<double> out;
  for (double c : values) out.push_back(c / scale);
  return from_numeric(n, std::move(out));
}

std::vector<std::string> Grassmann::legend() const {
  std::vector<std::string> out;
  for (auto [i, j] : index_pairs(n)) out.push_back("G" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  return out;
}

Grassmann grassmann(const SlopeSpec& s) {
  Grassmann g;
  g.n = s.n;
  if (s.is_exact()) {
    std::vector<AlgebraicNumber> coords;
    for (auto [i, j] : index_pairs(s.n)) coords.push_back(s.u[i] * s.v[j] - s.u[j] * s.v[i]);
    if (std::all_of(coords.begin(), coords.end(), [](const AlgebraicNumber& a) { return a.is_zero(); }))
      throw Error(Errc::degenerate_slope, "generators are linearly dependent");
    return Grassmann::from_exact(s.n, std::move(coords));
  }
  std::vector<double> coords;
  double scale = 0.0;
  for (auto [i, j] : index_pairs(s.n)) {
    coords.push_back(s.u_num[i] * s.v_num[j] - s.u_num[j] * s.v_num[i]);
    scale = std::max({scale, std::abs(s.u_num[i] * s.v_num[j]), std::abs(s.u_num[j] * s.v_num[i])});
  }
  const double top = std::abs(*std::max_element(coords.begin(), coords.end(),
                                                [](double a, double b) { return std::abs(a) < std::abs(b); }));
  if (top <= 1e-14 * std::max(scale, 1e-300))
    throw Error(Errc::degenerate_slope, "generators are linearly dependent");
  return Grassmann::from_numeric(s.n, std::move(coords));
}

std::vector<PluckerViolation> plucker_check(const Grassmann& g, double rel_tol) {
  std::vector<PluckerViolation> out;
  const std::size_t n = g.n;
  double maxg = 0.0;
  for (double c : g.values) maxg = std::max(maxg, std::abs(c));
  const double tol = rel_tol * maxg * maxg;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          PluckerViolation v{{i, j, k, l}, 0.0};
          if (g.is_exact()) {
            AlgebraicNumber r = g.exact_at(i, j) * g.exact_at(k, l) - g.exact_at(i, k) * g.exact_at(j, l) +
                                g.exact_at(i, l) * g.exact_at(j, k);
            if (!r.is_zero()) {
              v.residual = r.to_double();
              out.push_back(v);
            }
          } else {
            double r = g.at(i, j) * g.at(k, l) - g.at(i, k) * g.at(j, l) + g.at(i, l) * g.at(j, k);
            if (std::abs(r) > tol) {
              v.residual = r;
              out.push_back(v);
            }
          }
        }
  return out;
}

Frequencies frequencies(const Grassmann& g) {
  Frequencies f;
  if (g.is_exact()) {
    std::vector<AlgebraicNumber> mags;
    AlgebraicNumber total(g.exact.front().field());
    for (const auto& c : g.exact) {
      mags.push_back(abs(c));
      total += mags.back();
    }
    if (total.is_zero()) throw Error(Errc::all_zero, "all Grassmann coordinates vanish");
    const AlgebraicNumber inv = total.inverse();
    for (std::size_t k = 0; k < mags.size(); ++k) {
      f.exact.push_back(mags[k] * inv);
      f.values.push_back(f.exact.back().to_double());
      if (mags[k].is_zero()) f.degenerate.push_back(k);
    }
    return f;
  }
  double total = 0.0, top = 0.0;
  for (double c : g.values) {
    total += std::abs(c);
    top = std::max(top, std::abs(c));
  }
  if (total == 0.0) throw Error(Errc::all_zero, "all Grassmann coordinates vanish");
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    f.values.push_back(std::abs(g.values[k]) / total);
    if (std::abs(g.values[k]) <= 1e-12 * top) f.degenerate.push_back(k);
  }
  return f;
}

NfoldSlope nfold_slope(std::size_t n, bool full_star) {
  if (n < 4) throw Error(Errc::invalid_argument, "n-fold slopes need n >= 4");
  NfoldSlope out;
  out.n = n;
  out.m = (n % 2 == 1 || full_star) ? n : n / 2;
  std::vector<double> u, v;
  for (std::size_t k = 0; k < out.m; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    u.push_back(std::cos(angle));
    v.push_back(std::sin(angle));
  }
  out.slope = SlopeSpec::numeric(std::move(u), std::move(v));
  out.coords = grassmann(out.slope);
  double top = 0.0;
  for (double c : out.coords.values) top = std::max(top, std::abs(c));
  for (std::size_t k = 0; k < out.coords.values.size(); ++k)
    if (std::abs(out.coords.values[k]) <= 1e-12 * top) out.degenerate.push_back(k);
  return out;
}

namespace presets {

FieldPtr golden_field() {
  static const FieldPtr f = NumberField::create(RationalPoly{-1, -1, 1}, 1, 2);
  return f;
}

FieldPtr sqrt2_field() {
  static const FieldPtr f = NumberField::create(RationalPoly{-2, 0, 1}, 1, 2);
  return f;
}

FieldPtr cubic_field() {
  static const FieldPtr f = NumberField::create(RationalPoly{1, -2, -1, 1}, 1, 2);
  return f;
}

SlopeSpec golden_octagonal() {
  const auto f = golden_field();
  const auto phi = AlgebraicNumber::generator(f);
  return SlopeSpec::exact(f, {-1, 0, phi, phi}, {0, 1, phi, 1});
}

SlopeSpec ammann_beenker() {
  const auto f = sqrt2_field();
  const auto r = AlgebraicNumber::generator(f) * AlgebraicNumber(f, Rational(1, 2));  // sqrt(2)/2
  return SlopeSpec::exact(f, {1, r, 0, -r}, {0, r, 1, r});
}

SlopeSpec penrose() {
  const auto f = golden_field();
  const auto phi = AlgebraicNumber::generator(f);
  return SlopeSpec::exact(f, {phi, 0, -phi, -1, 1}, {-1, 1, phi, 0, -phi});
}

SlopeSpec cubic_dodecagonal() {
  const auto f = cubic_field();
  const auto a = AlgebraicNumber::generator(f);
  const auto b = a * a - 1;
  return SlopeSpec::exact(f, {-1, 0, 1, a, b, b}, {0, 1, a, b, b, a});
}

Grassmann ammann_beenker_family(const AlgebraicNumber& t) {
  const AlgebraicNumber one(t.field(), Rational(1));
  return Grassmann::from_exact(4, {one, t, one, one, AlgebraicNumber(2) / t, one});
}

SlopeSpec by_name(const std::string& name) {
  if (name == "golden" || name == "golden-octagonal") return golden_octagonal();
  if (name == "ammann-beenker" || name == "ab") return ammann_beenker();
  if (name == "penrose") return penrose();
  if (name == "cubic" || name == "cubic-dodecagonal") return cubic_dodecagonal();
  throw Error(Errc::invalid_argument, "unknown preset '" + name + "'");
}

}  // namespace presets

}  // namespace rhombus
