#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "netfig/color.hpp"
#include "netfig/units.hpp"

namespace netfig {

// Projection axes: angle in degrees counterclockwise from the positive
// x axis, length as a unit-vector scale. Defaults give the identity mapping
// with the z axis folded onto y.
struct Coordinates {
  double x_angle = 0.0, y_angle = 90.0, z_angle = 90.0;
  double x_length = 1.0, y_length = 1.0, z_length = 1.0;

  friend bool operator==(const Coordinates&, const Coordinates&) = default;
};

struct VertexStyle {
  std::string shape = "circle";
  Length inner_sep = Length::points(2);
  Length outer_sep = Length::points(0);
  std::optional<Length> min_size;  // unset: 0.6 default units
  ColorSpec fill_color = ColorSpec::named("vertexfill");
  double fill_opacity = 1.0;
  Length line_width = Length::points(1);
  ColorSpec line_color = ColorSpec::named("black");
  double line_opacity = 1.0;
  std::string text_font = "scriptsize";
  ColorSpec text_color = ColorSpec::named("black");
  double text_opacity = 1.0;
  double text_rotation = 0.0;

  friend bool operator==(const VertexStyle&, const VertexStyle&) = default;
};

struct EdgeStyle {
  Length line_width = Length::points(1.5);
  ColorSpec color = parse_color("black!75");
  double opacity = 1.0;
  std::string arrow = "-latex";
  std::string text_font = "scriptsize";
  ColorSpec text_color = ColorSpec::named("black");
  double text_opacity = 1.0;
  ColorSpec text_fill_color = ColorSpec::named("white");
  double text_fill_opacity = 1.0;
  Length inner_sep = Length::points(0);
  Length outer_sep = Length::points(1);
  double text_rotation = 0.0;

  friend bool operator==(const EdgeStyle&, const EdgeStyle&) = default;
};

struct TextStyle {
  std::string text_font = "normalsize";
  ColorSpec text_color = ColorSpec::named("black");
  double text_opacity = 1.0;
  Length inner_sep = Length::points(2);
  Length outer_sep = Length::points(0);
  double text_rotation = 0.0;

  friend bool operator==(const TextStyle&, const TextStyle&) = default;
};

struct PlaneStyle {
  Length line_width = Length::points(1.5);
  ColorSpec line_color = ColorSpec::named("black");
  double line_opacity = 1.0;
  ColorSpec fill_color = ColorSpec::named("vertexfill");
  double fill_opacity = 0.3;
  Length grid_line_width = Length::points(0.5);
  ColorSpec grid_color = ColorSpec::named("black");
  double grid_opacity = 0.5;

  friend bool operator==(const PlaneStyle&, const PlaneStyle&) = default;
};

enum class RenderMode { Flat, Multilayer2D, Multilayer3D };

struct Settings {
  Unit default_unit = Unit::Cm;
  double distance_scale = 1.0;
  std::optional<Length> layer_distance;  // unset: -2 default units
  Coordinates coordinates;
  VertexStyle vertex_style;
  EdgeStyle edge_style;
  TextStyle text_style;
  PlaneStyle plane_style;
  Length plane_width = Length::centimeters(5);
  Length plane_height = Length::centimeters(5);
  bool edges_in_bg = true;
  RenderMode mode = RenderMode::Flat;
  Palette palette = Palette::standard();

  Length effective_layer_distance() const;
  Length effective_min_size() const;

  static Settings defaults();
};

// Directives mirror the Set* commands: each carries only the fields that were
// given, so applying one leaves everything else untouched.
struct SetDefaultUnit { Unit unit; };
struct SetDistanceScale { double scale; };
struct SetLayerDistance { Length distance; };

struct SetCoordinates {
  std::optional<double> x_angle, y_angle, z_angle;
  std::optional<double> x_length, y_length, z_length;
};

struct SetVertexStyle {
  std::optional<std::string> shape;
  std::optional<Length> inner_sep, outer_sep, min_size, line_width;
  std::optional<ColorSpec> fill_color, line_color, text_color;
  std::optional<double> fill_opacity, line_opacity, text_opacity, text_rotation;
  std::optional<std::string> text_font;
};

struct SetEdgeStyle {
  std::optional<Length> line_width, inner_sep, outer_sep;
  std::optional<ColorSpec> color, text_color, text_fill_color;
  std::optional<double> opacity, text_opacity, text_fill_opacity, text_rotation;
  std::optional<std::string> arrow, text_font;
};

struct SetTextStyle {
  std::optional<std::string> text_font;
  std::optional<ColorSpec> text_color;
  std::optional<double> text_opacity, text_rotation;
  std::optional<Length> inner_sep, outer_sep;
};

struct SetPlaneStyle {
  std::optional<Length> line_width, grid_line_width;
  std::optional<ColorSpec> line_color, fill_color, grid_color;
  std::optional<double> line_opacity, fill_opacity, grid_opacity;
};

struct SetPlaneWidth { Length width; };
struct SetPlaneHeight { Length height; };
struct SetEdgesInBG { bool in_bg; };
struct DefineColor { std::string name; Rgb value; };

using Directive = std::variant<SetDefaultUnit, SetDistanceScale, SetLayerDistance,
                               SetCoordinates, SetVertexStyle, SetEdgeStyle, SetTextStyle,
                               SetPlaneStyle, SetPlaneWidth, SetPlaneHeight, SetEdgesInBG,
                               DefineColor>;

// Validates ranges (positive scale, angles within +-360, opacities in [0,1])
// and returns the updated settings. Throws Error{InvalidOption}.
Settings apply_setting(Settings settings, const Directive& directive);

// Parses one "key = value" pair from a settings file or a --set flag, e.g.
// "LayerDistance = -1.5", "Coordinates.xAngle = -30", "EdgeStyle.Color =
// black!75". Bare lengths read in the current default unit.
Directive parse_directive(std::string_view key, std::string_view value, Unit default_unit);

}  // namespace netfig
