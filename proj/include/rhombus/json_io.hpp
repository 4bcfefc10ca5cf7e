#pragma once

#include "rhombus/atlas.hpp"
#include "rhombus/planarity.hpp"
#include "rhombus/subperiods.hpp"
#include "rhombus/systems.hpp"
#include "rhombus/tiling.hpp"

#include "json.hpp"

#include <string>

namespace rhombus {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; plain JSON numbers are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"minpoly":[c0,...,cd],"interval":["lo","hi"]}
Json to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

/// {"minpoly":...,"interval":...,"coeffs":["q0",...]}
Json number_to_json(const AlgebraicNumber& a);
AlgebraicNumber number_from_json(const Json& j);

/// Exact: {"n","mode":"exact","field","u":[[coeffs]...],"v":...};
/// numeric: {"n","mode":"numeric","u":[x...],"v":[...]}.
/// Input also accepts {"preset":"golden"} and scalar entries for rationals.
Json to_json(const SlopeSpec& s);
SlopeSpec slope_from_json(const Json& j);

Json to_json(const Grassmann& g);
Json to_json(const Frequencies& f, const Grassmann& g);

Json to_json(const Tile& t);  // 1-based i, j
Json to_json(const Patch& p);
Patch patch_from_json(const Json& j);

Json subperiod_report(const SlopeSpec& s, const std::vector<ShadowPeriods>& shadows);

Json to_json(const MPoly& p, const std::vector<std::string>& names);
Json to_json(const RationalPoly& p);  // integers when integral, else "p/q"
Json to_json(const ReducedSystem& r);
Json to_json(const ChebyshevReport& r);
Json to_json(const Intersection& v);

Json to_json(const Atlas& a);
Atlas atlas_from_json(const Json& j);

Json to_json(const LiftCloud& c);
/// A bare array of n-vectors, or any object carrying "vertices" or "points".
LiftCloud cloud_from_json(const Json& j);
Json to_json(const ThicknessReport& r);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rhombus
