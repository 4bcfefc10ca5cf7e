#pragma once

#include "rhombus/tiling.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhombus {

struct Circle {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();  // tiling-plane units
  double diameter = 1.0;                             // in edge lengths
};

struct RenderOptions {
  double edge_px = 20.0;
  double stroke_width = 1.0;
  std::string stroke = "#333333";
  /// Overrides of the default palette, keyed by 0-based (i, j).
  std::map<std::pair<std::size_t, std::size_t>, std::string> fills;
  std::vector<Circle> circles;
  /// Unit edge vectors replacing the projected ones.
  std::optional<std::vector<Eigen::Vector2d>> edges;

  /// Throws InvalidArgument naming the bad field.
  void validate(std::size_t n) const;
};

bool is_color(const std::string& s);

/// Palette colour of tile type (i, j).
std::string default_fill(std::size_t n, std::size_t i, std::size_t j);

/// SVG 1.1 document with one polygon per tile, in patch order.
std::string to_svg(const Patch& p, const RenderOptions& o = {});

}  // namespace rhombus
