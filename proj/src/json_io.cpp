#include "rhombus/json_io.hpp"

#include "rhombus/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rhombus {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse_error, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Json triple(const Triple& t) { return Json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

Json int_vector(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) out.push_back(x.get_si());
    else out.push_back(x.get_str());
  }
  return out;
}

Json doubles(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Eigen::VectorXd doubles_from(const Json& j) {
  if (!j.is_array()) bad("expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) bad("expected a number");
    v(static_cast<Eigen::Index>(k)) = j[k].get<double>();
  }
  return v;
}

std::vector<Rational> coeff_list(const Json& j) {
  if (!j.is_array()) bad("expected a coefficient array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

AlgebraicNumber entry_from_json(const Json& j, const FieldPtr& field) {
  if (j.is_array()) {
    auto c = coeff_list(j);
    if (c.size() > static_cast<std::size_t>(field->degree())) bad("too many coefficients for the field");
    c.resize(static_cast<std::size_t>(field->degree()), Rational(0));
    return AlgebraicNumber(field, std::move(c));
  }
  return AlgebraicNumber(field, rational_from_json(j));
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("bad rational: ") + e.what());
  }
  bad("expected a rational, got " + j.dump());
}

Json to_json(const RationalPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) out.push_back(c.get_num().get_si());
    else out.push_back(to_string(c));
  }
  return out;
}

Json to_json(const FieldPtr& f) {
  Json out;
  out["minpoly"] = to_json(f->minpoly());
  out["interval"] = Json::array({to_string(f->interval_lo()), to_string(f->interval_hi())});
  return out;
}

FieldPtr field_from_json(const Json& j) {
  const auto poly = coeff_list(field_of(j, "minpoly"));
  const Json& iv = field_of(j, "interval");
  if (!iv.is_array() || iv.size() != 2) bad("\"interval\" must be [lo, hi]");
  return NumberField::create(RationalPoly(poly), rational_from_json(iv[0]), rational_from_json(iv[1]));
}

Json number_to_json(const AlgebraicNumber& a) {
  Json out = to_json(a.field());
  Json c = Json::array();
  for (const auto& q : a.coeffs()) c.push_back(to_string(q));
  out["coeffs"] = c;
  return out;
}

AlgebraicNumber number_from_json(const Json& j) {
  return entry_from_json(field_of(j, "coeffs"), field_from_json(j));
}

Json to_json(const SlopeSpec& s) {
  Json out;
  out["n"] = s.n;
  if (s.is_exact()) {
    out["mode"] = "exact";
    out["field"] = to_json(s.field);
    for (const auto* key : {"u", "v"}) {
      const auto& vec = std::string(key) == "u" ? s.u : s.v;
      Json arr = Json::array();
      for (const auto& x : vec) {
        // Entries are stored in the slope's field.
        const AlgebraicNumber y = x.field()->same_as(*s.field) ? x : AlgebraicNumber(s.field) + x;
        Json c = Json::array();
        for (const auto& q : y.coeffs()) c.push_back(to_string(q));
        arr.push_back(c);
      }
      out[key] = arr;
    }
  } else {
    out["mode"] = "numeric";
    out["u"] = s.u_num;
    out["v"] = s.v_num;
  }
  return out;
}

SlopeSpec slope_from_json(const Json& j) {
  if (!j.is_object()) bad("slope must be a JSON object");
  if (j.contains("preset")) return presets::by_name(j.at("preset").get<std::string>());
  if (j.contains("slope") && j.at("slope").is_object()) return slope_from_json(j.at("slope"));
  const std::string mode = j.value("mode", j.contains("field") ? "exact" : "numeric");
  const Json& u = field_of(j, "u");
  const Json& v = field_of(j, "v");
  if (!u.is_array() || !v.is_array() || u.size() != v.size()) bad("\"u\" and \"v\" must be arrays of equal length");
  if (j.contains("n") && j.at("n").get<std::size_t>() != u.size()) bad("\"n\" disagrees with the generator length");
  if (mode == "numeric") {
    std::vector<double> a, b;
    for (const auto& x : u) a.push_back(x.get<double>());
    for (const auto& x : v) b.push_back(x.get<double>());
    return SlopeSpec::numeric(a, b);
  }
  if (mode != "exact") bad("unknown mode '" + mode + "'");
  const FieldPtr field = j.contains("field") ? field_from_json(j.at("field")) : NumberField::rationals();
  std::vector<AlgebraicNumber> a, b;
  for (const auto& x : u) a.push_back(entry_from_json(x, field));
  for (const auto& x : v) b.push_back(entry_from_json(x, field));
  return SlopeSpec::exact(field, a, b);
}

Json to_json(const Grassmann& g) {
  Json out;
  out["n"] = g.n;
  out["legend"] = g.legend();
  out["coords"] = g.values;
  if (g.is_exact()) {
    Json ex = Json::array();
    for (const auto& x : g.exact) ex.push_back(x.to_string());
    out["exact"] = ex;
  }
  return out;
}

Json to_json(const Frequencies& f, const Grassmann& g) {
  Json out;
  out["legend"] = g.legend();
  out["values"] = f.values;
  if (!f.exact.empty()) {
    Json ex = Json::array();
    for (const auto& x : f.exact) ex.push_back(x.to_string());
    out["exact"] = ex;
  }
  Json deg = Json::array();
  for (auto k : f.degenerate) deg.push_back(g.legend()[k]);
  out["degenerate"] = deg;
  return out;
}

Json to_json(const Tile& t) {
  Json out;
  out["anchor"] = t.anchor;
  out["i"] = t.i + 1;
  out["j"] = t.j + 1;
  return out;
}

Json to_json(const Patch& p) {
  Json out;
  out["slope"] = to_json(p.slope);
  out["offset"] = doubles(p.offset);
  out["radius"] = p.radius;
  out["seed"] = p.seed;
  Json tiles = Json::array();
  for (const auto& t : p.tiles) tiles.push_back(to_json(t));
  out["tiles"] = tiles;
  out["vertices"] = p.vertices;
  Json missing = Json::array();
  const auto pairs = index_pairs(p.n);
  for (auto k : p.missing) missing.push_back(Json::array({pairs[k].first + 1, pairs[k].second + 1}));
  out["missing"] = missing;
  return out;
}

Patch patch_from_json(const Json& j) {
  Patch p;
  p.slope = slope_from_json(field_of(j, "slope"));
  p.n = p.slope.n;
  p.offset = j.contains("offset") ? doubles_from(j.at("offset")) : Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p.n - 2));
  p.radius = j.value("radius", 0.0);
  p.seed = j.value("seed", std::uint64_t{0});
  std::set<LatticePoint> verts;
  for (const auto& t : field_of(j, "tiles")) {
    Tile tile;
    tile.anchor = t.at("anchor").get<LatticePoint>();
    const long i = t.at("i").get<long>(), k = t.at("j").get<long>();
    if (tile.anchor.size() != p.n || i < 1 || k <= i || static_cast<std::size_t>(k) > p.n) bad("malformed tile");
    tile.i = static_cast<std::size_t>(i - 1);
    tile.j = static_cast<std::size_t>(k - 1);
    LatticePoint x = tile.anchor;
    verts.insert(x);
    ++x[tile.i];
    verts.insert(x);
    ++x[tile.j];
    verts.insert(x);
    --x[tile.i];
    verts.insert(x);
    p.tiles.push_back(std::move(tile));
  }
  if (j.contains("vertices"))
    for (const auto& x : j.at("vertices")) verts.insert(x.get<LatticePoint>());
  p.vertices.assign(verts.begin(), verts.end());
  std::sort(p.tiles.begin(), p.tiles.end());
  std::vector<bool> seen(pair_count(p.n), false);
  for (const auto& t : p.tiles) seen[pair_index(p.n, t.i, t.j)] = true;
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) p.missing.push_back(k);
  return p;
}

Json subperiod_report(const SlopeSpec& s, const std::vector<ShadowPeriods>& shadows) {
  Json out = Json::array();
  for (const auto& sh : shadows) {
    Json e;
    e["shadow"] = triple(sh.indices);
    Json periods = Json::array(), lifts = Json::array();
    for (const auto& p : sh.periods) {
      periods.push_back(int_vector(p.vector));
      if (sh.count() == 1) {
        try {
          const SubperiodLift l = lift_subperiod(s, p);
          Json lift;
          lift["vector"] = l.numeric();
          Json ex = Json::array();
          for (const auto& x : l.vector) ex.push_back(x.to_string());
          lift["exact"] = ex;
          lift["norm"] = l.norm();
          lifts.push_back(lift);
        } catch (const Error&) {
        }
      }
    }
    e["periods"] = periods;
    e["count"] = sh.count();
    if (sh.degenerate()) e["degenerate"] = true;
    e["lift"] = lifts;
    out.push_back(e);
  }
  return out;
}

Json to_json(const MPoly& p, const std::vector<std::string>& names) {
  Json out;
  out["text"] = p.to_string(names);
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["monomial"] = m;
    t["coeff"] = to_string(c);
    terms.push_back(t);
  }
  out["terms"] = terms;
  return out;
}

Json to_json(const ReducedSystem& r) {
  Json out;
  out["n"] = r.n;
  Json rel = Json::array();
  for (const auto& row : r.relations.rows) rel.push_back(relation_to_string(row, r.n));
  out["relations"] = rel;
  if (r.dimension == Dimension::zero) out["dimension"] = 0;
  else if (r.dimension == Dimension::one) out["dimension"] = 1;
  else out["dimension"] = to_string(r.dimension);
  out["note"] = r.note;
  Json free = Json::array();
  for (auto c : r.form.free) free.push_back(coordinate_name(r.n, c));
  out["free"] = free;
  if (!r.form.free.empty()) out["pivot"] = coordinate_name(r.n, r.pivot);
  Json zero = Json::array();
  for (auto c : r.fixed_zero) zero.push_back(coordinate_name(r.n, c));
  out["fixed_zero"] = zero;
  out["variables"] = r.variable_names();
  Json subs = Json::object();
  const auto pairs = index_pairs(r.n);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    if (std::find(r.form.free.begin(), r.form.free.end(), c) != r.form.free.end()) continue;
    std::string e;
    for (auto f : r.form.free) {
      const Rational& w = r.form.expression[c][f];
      if (w == 0) continue;
      if (!e.empty()) e += w > 0 ? " + " : " - ";
      else if (w < 0) e += "-";
      const Rational a = abs(w);
      e += (a == 1 ? "" : to_string(a) + "*") + coordinate_name(r.n, f);
    }
    subs[coordinate_name(r.n, c)] = e.empty() ? "0" : e;
  }
  out["substitution"] = subs;
  Json res = Json::array();
  for (const auto& p : r.distinct) res.push_back(to_json(p, r.variable_names()));
  out["residuals"] = res;
  if (r.univariate) {
    out["minpoly"] = to_json(*r.univariate);
    out["residual"] = r.univariate->to_string(r.variable_names().front());
  }
  Json sols = Json::array();
  for (const auto& g : r.solutions) sols.push_back(to_json(g));
  out["solutions"] = sols;
  return out;
}

Json to_json(const ChebyshevReport& r) {
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["dimension"] = r.dimension;
  out["constraint"] = r.constraint;
  out["variable"] = r.product_form ? "XY" : "X";
  out["rhs"] = to_string(r.rhs);
  out["polynomial"] = to_json(r.polynomial);
  out["u_xy"] = r.u_xy.to_string({"X", "Y"});
  Json ids = Json::array();
  for (const auto& i : r.identities) ids.push_back(i.to_string());
  out["identities"] = ids;
  return out;
}

Json to_json(const Intersection& v) {
  Json out;
  out["dimension"] = v.dimension;
  Json basis = Json::array();
  for (const auto& row : v.basis) {
    Json b = Json::array();
    for (const auto& x : row) b.push_back(x.to_string());
    basis.push_back(b);
  }
  out["basis"] = basis;
  return out;
}

Json to_json(const Atlas& a) {
  Json out;
  out["r"] = a.r;
  Json pats = Json::array();
  for (const auto& p : a.patterns) {
    Json tiles = Json::array();
    for (const auto& t : p.tiles) tiles.push_back(to_json(t));
    pats.push_back(tiles);
  }
  out["patterns"] = pats;
  return out;
}

Atlas atlas_from_json(const Json& j) {
  Atlas a;
  a.r = field_of(j, "r").get<double>();
  for (const auto& pat : field_of(j, "patterns")) {
    std::vector<Tile> tiles;
    for (const auto& t : pat) {
      Tile tile;
      tile.anchor = t.at("anchor").get<LatticePoint>();
      tile.i = t.at("i").get<std::size_t>() - 1;
      tile.j = t.at("j").get<std::size_t>() - 1;
      tiles.push_back(std::move(tile));
    }
    a.patterns.insert(canonical(std::move(tiles)));
  }
  return a;
}

Json to_json(const LiftCloud& c) {
  Json out = Json::array();
  for (const auto& p : c.points) out.push_back(doubles(p));
  return out;
}

LiftCloud cloud_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (j.contains("vertices")) arr = &j.at("vertices");
    else if (j.contains("points")) arr = &j.at("points");
    else bad("cloud must be an array or carry \"vertices\"/\"points\"");
  }
  if (!arr->is_array() || arr->empty()) bad("cloud is empty");
  LiftCloud c;
  for (const auto& p : *arr) {
    c.points.push_back(doubles_from(p));
    if (c.n == 0) c.n = static_cast<std::size_t>(c.points.back().size());
    if (static_cast<std::size_t>(c.points.back().size()) != c.n) bad("cloud points differ in length");
  }
  return c;
}

Json to_json(const ThicknessReport& r) {
  Json out;
  out["t"] = r.t;
  out["raw"] = r.raw;
  out["tiling"] = r.tiling;
  if (r.fitted) out["slope"] = to_json(*r.fitted);
  out["offset"] = doubles(r.offset);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << text;
}

}  // namespace rhombus
