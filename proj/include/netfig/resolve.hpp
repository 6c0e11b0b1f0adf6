#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netfig/network.hpp"
#include "netfig/options.hpp"
#include "netfig/settings.hpp"

namespace netfig {

// Fully resolved views: every optional option replaced by its effective
// value from the style tables, colors looked up to bytes, coordinates scaled.
// These are what the scene builder draws from.

struct ResolvedVertex {
  std::string id;
  double x = 0.0, y = 0.0;  // cm, distance scale applied
  int layer = 1;
  double radius = 0.0;  // cm, 0 for pseudo vertices
  std::string shape;
  ColorSpec fill_color;
  Rgb fill_rgb;
  double fill_opacity = 1.0;
  Length line_width;
  Rgb line_rgb;
  double line_opacity = 1.0;
  std::optional<std::string> label;  // absent when suppressed
  bool math_label = false;
  std::string font_size;
  double font_scale = 1.0;
  Rgb font_rgb;
  double text_opacity = 1.0;
  double text_rotation = 0.0;
  LabelPosition position;
  Length label_distance;
  std::optional<std::string> style;
  bool pseudo = false;

  // The resolved state re-expressed as a fully set spec; resolving it again
  // must give back the same result.
  VertexSpec as_spec(const Settings& settings) const;

  friend bool operator==(const ResolvedVertex&, const ResolvedVertex&) = default;
};

struct ResolvedEdge {
  std::string u, v;
  Length line_width;
  Rgb color_rgb;
  double opacity = 1.0;
  double bend = 0.0;
  std::optional<std::string> label;
  bool math_label = false;
  std::string font_size;
  double font_scale = 1.0;
  Rgb font_rgb;
  double text_opacity = 1.0;
  Rgb text_fill_rgb;
  double text_fill_opacity = 1.0;
  double text_rotation = 0.0;
  LabelPosition position;
  double label_fraction = 0.5;  // position along the edge
  std::optional<std::string> style;
  std::vector<Waypoint> path;
  Length loopsize;
  double loopposition = 0.0;
  double loopshape = 90.0;
  bool directed = false;
  std::string arrow;  // only meaningful when directed
  bool in_background = true;
  bool self_loop = false;

  friend bool operator==(const ResolvedEdge&, const ResolvedEdge&) = default;
};

struct ResolvedText {
  std::string content;
  double x = 0.0, y = 0.0;  // cm, distance scale applied
  int layer = 1;
  std::string font_size;
  double font_scale = 1.0;
  Rgb color_rgb;
  double opacity = 1.0;
  LabelPosition position;
  Length distance;
  double rotation = 0.0;
  std::optional<std::string> anchor;
  std::optional<Length> width;
  std::optional<std::string> style;

  friend bool operator==(const ResolvedText&, const ResolvedText&) = default;
};

struct ResolvedPlane {
  double x = 0.0, y = 0.0;  // cm, distance scale applied
  double width = 5.0, height = 5.0;
  int layer = 1;
  bool fill = true;
  Rgb fill_rgb;
  double fill_opacity = 0.3;
  bool border = true;
  Length line_width;
  Rgb line_rgb;
  double line_opacity = 1.0;
  std::optional<double> grid;  // spacing in cm
  Length grid_line_width;
  Rgb grid_rgb;
  double grid_opacity = 0.5;
  std::optional<std::string> image;
  bool image_and_fill = false;
  bool in_background = false;
  std::optional<std::string> style;

  friend bool operator==(const ResolvedPlane&, const ResolvedPlane&) = default;
};

ResolvedVertex resolve_vertex(const VertexSpec& spec, const Settings& settings);
ResolvedEdge resolve_edge(const EdgeSpec& spec, const Settings& settings, const Network& network);
ResolvedText resolve_text(const TextSpec& spec, const Settings& settings);
ResolvedPlane resolve_plane(const PlaneSpec& spec, const Settings& settings);

}  // namespace netfig
