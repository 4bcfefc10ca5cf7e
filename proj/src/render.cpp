#include "rhombus/render.hpp"

#include "rhombus/error.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>
#include <sstream>

namespace rhombus {

namespace {

constexpr std::array<const char*, 15> kPalette{
    "#e6b34a", "#4a7fb5", "#d9664a", "#6bab5a", "#9b6bb5", "#4ab5b0", "#c9c24a", "#b54a7f",
    "#7a8a99", "#e08f3c", "#3c9e6e", "#5d5fc4", "#c45d5d", "#8fb53c", "#3cb0e0"};

std::string fmt(double x) {
  if (std::abs(x) < 5e-4) x = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

bool is_color(const std::string& s) {
  static const std::regex hex("#([0-9a-fA-F]{3}|[0-9a-fA-F]{6})");
  static const std::regex word("[a-z]+");
  return std::regex_match(s, hex) || std::regex_match(s, word);
}

void RenderOptions::validate(std::size_t n) const {
  if (!(edge_px > 0) || !std::isfinite(edge_px)) throw Error(Errc::invalid_argument, "edge_px must be positive");
  if (!(stroke_width >= 0) || !std::isfinite(stroke_width))
    throw Error(Errc::invalid_argument, "stroke_width must be non-negative");
  if (!is_color(stroke)) throw Error(Errc::invalid_argument, "stroke is not a colour: '" + stroke + "'");
  for (const auto& [key, c] : fills) {
    if (key.first >= key.second || key.second >= n)
      throw Error(Errc::invalid_argument, "fill key (" + std::to_string(key.first + 1) + "," +
                                              std::to_string(key.second + 1) + ") is not a tile type");
    if (!is_color(c)) throw Error(Errc::invalid_argument, "fill is not a colour: '" + c + "'");
  }
  for (const auto& c : circles)
    if (!(c.diameter > 0)) throw Error(Errc::invalid_argument, "circle diameter must be positive");
  if (edges) {
    if (edges->size() != n) throw Error(Errc::invalid_argument, "edges needs one vector per direction");
    for (const auto& e : *edges)
      if (std::abs(e.norm() - 1.0) > 1e-9) throw Error(Errc::invalid_argument, "edges must be unit vectors");
  }
}

std::string default_fill(std::size_t n, std::size_t i, std::size_t j) {
  return kPalette[pair_index(n, i, j) % kPalette.size()];
}

std::string to_svg(const Patch& p, const RenderOptions& o) {
  o.validate(p.n);
  const std::vector<Eigen::Vector2d> edges = o.edges ? *o.edges : build_projectors(p.slope).tile_vectors();
  const double s = o.edge_px;
  // SVG y grows downwards.
  const auto px = [&](const Eigen::Vector2d& y) { return Eigen::Vector2d(s * y.x(), -s * y.y()); };

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  std::vector<std::array<Eigen::Vector2d, 4>> polys;
  polys.reserve(p.tiles.size());
  for (const auto& t : p.tiles) {
    const Eigen::Vector2d a = tiling_position(edges, t.anchor);
    std::array<Eigen::Vector2d, 4> q{px(a), px(a + edges[t.i]), px(a + edges[t.i] + edges[t.j]), px(a + edges[t.j])};
    for (const auto& c : q) {
      lo_x = std::min(lo_x, c.x());
      lo_y = std::min(lo_y, c.y());
      hi_x = std::max(hi_x, c.x());
      hi_y = std::max(hi_y, c.y());
    }
    polys.push_back(q);
  }
  for (const auto& c : o.circles) {
    const Eigen::Vector2d m = px(c.center);
    const double r = c.diameter / 2 * s;
    lo_x = std::min(lo_x, m.x() - r);
    lo_y = std::min(lo_y, m.y() - r);
    hi_x = std::max(hi_x, m.x() + r);
    hi_y = std::max(hi_y, m.y() + r);
  }
  if (polys.empty() && o.circles.empty()) lo_x = lo_y = hi_x = hi_y = 0.0;
  const double pad = s;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(hi_x - lo_x) << "\" height=\""
      << fmt(hi_y - lo_y) << "\" viewBox=\"" << fmt(lo_x) << ' ' << fmt(lo_y) << ' ' << fmt(hi_x - lo_x) << ' '
      << fmt(hi_y - lo_y) << "\">\n"
      << "<g stroke=\"" << o.stroke << "\" stroke-width=\"" << fmt(o.stroke_width)
      << "\" stroke-linejoin=\"round\">\n";
  for (std::size_t k = 0; k < p.tiles.size(); ++k) {
    const Tile& t = p.tiles[k];
    const auto it = o.fills.find({t.i, t.j});
    const std::string fill = it != o.fills.end() ? it->second : default_fill(p.n, t.i, t.j);
    out << "<polygon class=\"t" << t.i + 1 << '-' << t.j + 1 << "\" fill=\"" << fill << "\" points=\"";
    for (std::size_t c = 0; c < 4; ++c)
      out << (c ? " " : "") << fmt(polys[k][c].x()) << ',' << fmt(polys[k][c].y());
    out << "\"/>\n";
  }
  out << "</g>\n";
  for (const auto& c : o.circles) {
    const Eigen::Vector2d m = px(c.center);
    out << "<circle cx=\"" << fmt(m.x()) << "\" cy=\"" << fmt(m.y()) << "\" r=\"" << fmt(c.diameter / 2 * s)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << fmt(std::max(o.stroke_width, 1.0)) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rhombus
