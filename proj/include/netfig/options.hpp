#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netfig/color.hpp"
#include "netfig/units.hpp"

namespace netfig {

// Placement of a label relative to its owner: centered, a compass keyword
// ("above", "below left", ...) with an optional extra offset, or a free angle
// in degrees counterclockwise from the positive x axis.
struct LabelPosition {
  enum class Kind { Center, Keyword, Angle };

  Kind kind = Kind::Center;
  std::string keyword;           // Keyword
  std::optional<Length> offset;  // Keyword, added to the label distance
  double angle_deg = 0.0;        // Angle

  static LabelPosition center() { return {}; }
  static LabelPosition at_keyword(std::string keyword, std::optional<Length> offset = {}) {
    return {Kind::Keyword, std::move(keyword), offset, 0.0};
  }
  static LabelPosition at_angle(double angle_deg) { return {Kind::Angle, {}, {}, angle_deg}; }

  friend bool operator==(const LabelPosition&, const LabelPosition&) = default;
};

// Angle of a placement keyword, degrees counterclockwise from +x;
// nullopt for unknown keywords.
std::optional<double> label_keyword_angle(std::string_view keyword);

// One stop of an edge path: either a vertex reference or a literal point.
struct Waypoint {
  enum class Kind { Vertex, Point };

  Kind kind = Kind::Vertex;
  std::string id;  // Vertex
  Length x, y;     // Point

  static Waypoint vertex(std::string id) { return {Kind::Vertex, std::move(id), {}, {}}; }
  static Waypoint point(Length x, Length y) { return {Kind::Point, {}, x, y}; }

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

// Every option is optional so that set and unset fields stay distinguishable:
// the TeX writer emits only what was set, and defaults resolve later against
// the style tables. Unset is never the same as zero.
struct VertexSpec {
  std::string id;
  std::optional<Length> x, y;
  std::optional<Length> size;  // diameter
  std::optional<ColorSpec> color;
  std::optional<double> opacity;
  std::optional<std::string> shape;
  std::optional<std::string> label;
  std::optional<std::string> fontsize;  // LaTeX size command without backslash
  std::optional<ColorSpec> fontcolor;
  std::optional<double> fontscale;
  std::optional<LabelPosition> position;
  std::optional<Length> distance;
  std::optional<std::string> style;
  std::optional<int> layer;
  bool no_label = false;
  bool id_as_label = false;
  bool math = false;
  bool rgb_mode = false;
  bool pseudo = false;
  std::optional<Rgb> rgb;  // from R/G/B columns

  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct EdgeSpec {
  std::string u, v;
  std::optional<Length> lw;  // pt-denominated line width
  std::optional<ColorSpec> color;
  std::optional<double> opacity;
  std::optional<double> bend;  // degrees, |bend| < 180
  std::optional<std::string> label;
  std::optional<std::string> fontsize;
  std::optional<ColorSpec> fontcolor;
  std::optional<double> fontscale;
  std::optional<LabelPosition> position;
  std::optional<double> distance;  // label position along the edge, fraction in [0,1]
  std::optional<std::string> style;
  std::vector<Waypoint> path;  // empty = straight connection
  std::optional<Length> loopsize;
  std::optional<double> loopposition;  // degrees
  std::optional<double> loopshape;     // degrees
  bool direct = false;
  bool math = false;
  bool rgb_mode = false;
  bool not_in_bg = false;
  std::optional<Rgb> rgb;

  bool self_loop() const { return u == v; }
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct TextSpec {
  std::string content;
  std::optional<Length> x, y;
  std::optional<std::string> fontsize;
  std::optional<ColorSpec> color;
  std::optional<double> opacity;
  std::optional<LabelPosition> position;
  std::optional<Length> distance;
  std::optional<double> rotation;       // degrees
  std::optional<std::string> anchor;    // compass token, overrides the derived one
  std::optional<Length> width;          // wrap width
  std::optional<std::string> style;
  std::optional<int> layer;
  bool rgb_mode = false;
  std::optional<Rgb> rgb;

  friend bool operator==(const TextSpec&, const TextSpec&) = default;
};

struct PlaneSpec {
  std::optional<Length> x, y;  // lower-left corner
  std::optional<Length> width, height;
  std::optional<ColorSpec> color;
  std::optional<double> opacity;
  std::optional<Length> grid;  // grid spacing
  std::optional<std::string> image;
  std::optional<std::string> style;
  std::optional<int> layer;
  bool rgb_mode = false;
  bool no_fill = false;
  bool no_border = false;
  bool image_and_fill = false;
  bool in_bg = false;
  std::optional<Rgb> rgb;

  friend bool operator==(const PlaneSpec&, const PlaneSpec&) = default;
};

}  // namespace netfig
