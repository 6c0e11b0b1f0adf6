#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "netfig/geometry.hpp"
#include "netfig/network.hpp"
#include "netfig/settings.hpp"

namespace netfig {

// Flat list of draw primitives in paint order, all geometry in cm with y up.
// The SVG writer translates this to markup without reordering anything.

struct LabelBox {
  Point2 point;
  std::string text;
  bool math = false;
  double font_px = 0.0;
  Rgb color;
  double opacity = 1.0;
  std::optional<Rgb> fill;  // background rectangle
  double fill_opacity = 1.0;
  double rotation_deg = 0.0;
  std::string anchor = "center";
};

struct PlanePrim {
  std::array<Point2, 4> polygon;
  std::optional<Rgb> fill;
  double fill_opacity = 0.3;
  std::optional<Rgb> border;
  double border_width_pt = 1.5;
  double border_opacity = 1.0;
  std::vector<std::pair<Point2, Point2>> grid_lines;
  double grid_width_pt = 0.5;
  Rgb grid_color;
  double grid_opacity = 0.5;
  std::optional<std::string> image;
  int layer = 1;
};

struct EdgePrim {
  std::string u, v;
  Curve curve;
  double width_pt = 1.5;
  Rgb color;
  double opacity = 1.0;
  std::optional<std::array<Point2, 3>> arrowhead;
  std::optional<LabelBox> label;
  int layer = 1;  // max of the endpoint layers
  bool background = true;
  bool intra_layer = true;
};

struct VertexPrim {
  std::string id;
  Point2 center;
  double radius = 0.0;
  std::string shape = "circle";
  std::optional<Rgb> fill;
  double fill_opacity = 1.0;
  std::optional<Rgb> border;
  double border_width_pt = 1.0;
  double border_opacity = 1.0;
  std::optional<LabelBox> label;
  int layer = 1;
};

struct TextPrim {
  Point2 point;
  std::string content;
  bool math = false;
  double font_px = 10.0;
  Rgb color;
  double opacity = 1.0;
  double rotation_deg = 0.0;
  std::string anchor = "center";
  std::optional<double> wrap_width;  // cm
  int layer = 1;
};

using Primitive = std::variant<PlanePrim, EdgePrim, VertexPrim, TextPrim>;

struct SceneBounds {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
};

struct Scene {
  std::vector<Primitive> prims;
  SceneBounds bounds;  // encloses everything plus a 0.25 cm margin
  std::vector<std::string> warnings;
};

// LaTeX font size command -> pixel size, times fontscale. Sizes follow the
// 10pt document classes; 96 css px per inch, 72.27 TeX pt per inch.
double map_fontsize(std::string_view size_command, double fontscale);

// Resolves the network against the settings and lays out primitives in paint
// order: planes by descending layer, then background edges by descending
// max endpoint layer, then per layer (descending) its vertices followed by
// its foreground intra-layer edges, then foreground inter-layer edges, then
// texts. Raw layer blocks are skipped with a warning.
Scene scene_build(const Network& network, const Settings& settings);

}  // namespace netfig
