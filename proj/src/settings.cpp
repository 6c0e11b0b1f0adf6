#include "netfig/settings.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "netfig/errors.hpp"

namespace netfig {

Length Settings::effective_layer_distance() const {
  if (layer_distance) return *layer_distance;
  return Length::of(-2.0, default_unit);
}

Length Settings::effective_min_size() const {
  if (vertex_style.min_size) return *vertex_style.min_size;
  return Length::of(0.6, default_unit);
}

Settings Settings::defaults() { return Settings{}; }

namespace {

void check_opacity(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::InvalidOption, std::string(field) + " must be in [0,1]");
  }
}

void check_angle(double value, const char* field) {
  if (!(value >= -360.0 && value <= 360.0)) {
    throw Error(ErrorKind::InvalidOption, std::string(field) + " must be in [-360,360]");
  }
}

void check_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidOption, std::string(field) + " must be positive");
  }
}

template <class T>
void assign(std::optional<T> const& from, T& to) {
  if (from) to = *from;
}

struct Applier {
  Settings s;

  Settings operator()(const SetDefaultUnit& d) {
    s.default_unit = d.unit;
    return s;
  }
  Settings operator()(const SetDistanceScale& d) {
    check_positive(d.scale, "distance scale");
    s.distance_scale = d.scale;
    return s;
  }
  Settings operator()(const SetLayerDistance& d) {
    if (!std::isfinite(d.distance.cm)) {
      throw Error(ErrorKind::InvalidOption, "layer distance must be finite");
    }
    s.layer_distance = d.distance;
    return s;
  }
  Settings operator()(const SetCoordinates& d) {
    if (d.x_angle) check_angle(*d.x_angle, "x angle");
    if (d.y_angle) check_angle(*d.y_angle, "y angle");
    if (d.z_angle) check_angle(*d.z_angle, "z angle");
    if (d.x_length) check_positive(*d.x_length, "x length");
    if (d.y_length) check_positive(*d.y_length, "y length");
    if (d.z_length) check_positive(*d.z_length, "z length");
    assign(d.x_angle, s.coordinates.x_angle);
    assign(d.y_angle, s.coordinates.y_angle);
    assign(d.z_angle, s.coordinates.z_angle);
    assign(d.x_length, s.coordinates.x_length);
    assign(d.y_length, s.coordinates.y_length);
    assign(d.z_length, s.coordinates.z_length);
    return s;
  }
  Settings operator()(const SetVertexStyle& d) {
    if (d.fill_opacity) check_opacity(*d.fill_opacity, "fill opacity");
    if (d.line_opacity) check_opacity(*d.line_opacity, "line opacity");
    if (d.text_opacity) check_opacity(*d.text_opacity, "text opacity");
    if (d.text_rotation) check_angle(*d.text_rotation, "text rotation");
    if (d.min_size) check_positive(d.min_size->cm, "min size");
    if (d.line_width) check_positive(d.line_width->cm, "line width");
    auto& v = s.vertex_style;
    assign(d.shape, v.shape);
    assign(d.inner_sep, v.inner_sep);
    assign(d.outer_sep, v.outer_sep);
    if (d.min_size) v.min_size = *d.min_size;
    assign(d.fill_color, v.fill_color);
    assign(d.fill_opacity, v.fill_opacity);
    assign(d.line_width, v.line_width);
    assign(d.line_color, v.line_color);
    assign(d.line_opacity, v.line_opacity);
    assign(d.text_font, v.text_font);
    assign(d.text_color, v.text_color);
    assign(d.text_opacity, v.text_opacity);
    assign(d.text_rotation, v.text_rotation);
    return s;
  }
  Settings operator()(const SetEdgeStyle& d) {
    if (d.opacity) check_opacity(*d.opacity, "opacity");
    if (d.text_opacity) check_opacity(*d.text_opacity, "text opacity");
    if (d.text_fill_opacity) check_opacity(*d.text_fill_opacity, "text fill opacity");
    if (d.text_rotation) check_angle(*d.text_rotation, "text rotation");
    if (d.line_width) check_positive(d.line_width->cm, "line width");
    auto& e = s.edge_style;
    assign(d.line_width, e.line_width);
    assign(d.color, e.color);
    assign(d.opacity, e.opacity);
    assign(d.arrow, e.arrow);
    assign(d.text_font, e.text_font);
    assign(d.text_color, e.text_color);
    assign(d.text_opacity, e.text_opacity);
    assign(d.text_fill_color, e.text_fill_color);
    assign(d.text_fill_opacity, e.text_fill_opacity);
    assign(d.inner_sep, e.inner_sep);
    assign(d.outer_sep, e.outer_sep);
    assign(d.text_rotation, e.text_rotation);
    return s;
  }
  Settings operator()(const SetTextStyle& d) {
    if (d.text_opacity) check_opacity(*d.text_opacity, "text opacity");
    if (d.text_rotation) check_angle(*d.text_rotation, "text rotation");
    auto& t = s.text_style;
    assign(d.text_font, t.text_font);
    assign(d.text_color, t.text_color);
    assign(d.text_opacity, t.text_opacity);
    assign(d.inner_sep, t.inner_sep);
    assign(d.outer_sep, t.outer_sep);
    assign(d.text_rotation, t.text_rotation);
    return s;
  }
  Settings operator()(const SetPlaneStyle& d) {
    if (d.line_opacity) check_opacity(*d.line_opacity, "line opacity");
    if (d.fill_opacity) check_opacity(*d.fill_opacity, "fill opacity");
    if (d.grid_opacity) check_opacity(*d.grid_opacity, "grid opacity");
    if (d.line_width) check_positive(d.line_width->cm, "line width");
    if (d.grid_line_width) check_positive(d.grid_line_width->cm, "grid line width");
    auto& p = s.plane_style;
    assign(d.line_width, p.line_width);
    assign(d.line_color, p.line_color);
    assign(d.line_opacity, p.line_opacity);
    assign(d.fill_color, p.fill_color);
    assign(d.fill_opacity, p.fill_opacity);
    assign(d.grid_line_width, p.grid_line_width);
    assign(d.grid_color, p.grid_color);
    assign(d.grid_opacity, p.grid_opacity);
    return s;
  }
  Settings operator()(const SetPlaneWidth& d) {
    check_positive(d.width.cm, "plane width");
    s.plane_width = d.width;
    return s;
  }
  Settings operator()(const SetPlaneHeight& d) {
    check_positive(d.height.cm, "plane height");
    s.plane_height = d.height;
    return s;
  }
  Settings operator()(const SetEdgesInBG& d) {
    s.edges_in_bg = d.in_bg;
    return s;
  }
  Settings operator()(const DefineColor& d) {
    s.palette.set(d.name, d.value);
    return s;
  }
};

}  // namespace

Settings apply_setting(Settings settings, const Directive& directive) {
  return std::visit(Applier{std::move(settings)}, directive);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double parse_number(std::string_view text, std::string_view key) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::Parse, "malformed number for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  std::string v = lower(trim(text));
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(ErrorKind::Parse, "expected true or false for " + std::string(key));
}

Directive parse_coordinates_field(std::string_view field, std::string_view value,
                                  std::string_view key) {
  SetCoordinates d;
  double number = parse_number(value, key);
  std::string f = lower(field);
  if (f == "xangle") d.x_angle = number;
  else if (f == "yangle") d.y_angle = number;
  else if (f == "zangle") d.z_angle = number;
  else if (f == "xlength") d.x_length = number;
  else if (f == "ylength") d.y_length = number;
  else if (f == "zlength") d.z_length = number;
  else throw Error(ErrorKind::InvalidOption, "unknown coordinates field '" + std::string(field) + "'");
  return d;
}

Directive parse_vertex_style_field(std::string_view field, std::string_view value,
                                   Unit unit, std::string_view key) {
  SetVertexStyle d;
  std::string f = lower(field);
  if (f == "shape") d.shape = std::string(trim(value));
  else if (f == "innersep") d.inner_sep = parse_length(value, Unit::Pt);
  else if (f == "outersep") d.outer_sep = parse_length(value, Unit::Pt);
  else if (f == "minsize") d.min_size = parse_length(value, unit);
  else if (f == "fillcolor") d.fill_color = parse_color(value);
  else if (f == "fillopacity") d.fill_opacity = parse_number(value, key);
  else if (f == "linewidth") d.line_width = parse_length(value, Unit::Pt);
  else if (f == "linecolor") d.line_color = parse_color(value);
  else if (f == "lineopacity") d.line_opacity = parse_number(value, key);
  else if (f == "textfont") d.text_font = std::string(trim(value));
  else if (f == "textcolor") d.text_color = parse_color(value);
  else if (f == "textopacity") d.text_opacity = parse_number(value, key);
  else if (f == "textrotation") d.text_rotation = parse_number(value, key);
  else throw Error(ErrorKind::InvalidOption, "unknown vertex style field '" + std::string(field) + "'");
  return d;
}

Directive parse_edge_style_field(std::string_view field, std::string_view value,
                                 std::string_view key) {
  SetEdgeStyle d;
  std::string f = lower(field);
  if (f == "linewidth") d.line_width = parse_length(value, Unit::Pt);
  else if (f == "color") d.color = parse_color(value);
  else if (f == "opacity") d.opacity = parse_number(value, key);
  else if (f == "arrow") d.arrow = std::string(trim(value));
  else if (f == "textfont") d.text_font = std::string(trim(value));
  else if (f == "textcolor") d.text_color = parse_color(value);
  else if (f == "textopacity") d.text_opacity = parse_number(value, key);
  else if (f == "textfillcolor") d.text_fill_color = parse_color(value);
  else if (f == "textfillopacity") d.text_fill_opacity = parse_number(value, key);
  else if (f == "innersep") d.inner_sep = parse_length(value, Unit::Pt);
  else if (f == "outersep") d.outer_sep = parse_length(value, Unit::Pt);
  else if (f == "textrotation") d.text_rotation = parse_number(value, key);
  else throw Error(ErrorKind::InvalidOption, "unknown edge style field '" + std::string(field) + "'");
  return d;
}

Directive parse_text_style_field(std::string_view field, std::string_view value,
                                 std::string_view key) {
  SetTextStyle d;
  std::string f = lower(field);
  if (f == "textfont") d.text_font = std::string(trim(value));
  else if (f == "textcolor") d.text_color = parse_color(value);
  else if (f == "textopacity") d.text_opacity = parse_number(value, key);
  else if (f == "innersep") d.inner_sep = parse_length(value, Unit::Pt);
  else if (f == "outersep") d.outer_sep = parse_length(value, Unit::Pt);
  else if (f == "textrotation") d.text_rotation = parse_number(value, key);
  else throw Error(ErrorKind::InvalidOption, "unknown text style field '" + std::string(field) + "'");
  return d;
}

Directive parse_plane_style_field(std::string_view field, std::string_view value,
                                  std::string_view key) {
  SetPlaneStyle d;
  std::string f = lower(field);
  if (f == "linewidth") d.line_width = parse_length(value, Unit::Pt);
  else if (f == "linecolor") d.line_color = parse_color(value);
  else if (f == "lineopacity") d.line_opacity = parse_number(value, key);
  else if (f == "fillcolor") d.fill_color = parse_color(value);
  else if (f == "fillopacity") d.fill_opacity = parse_number(value, key);
  else if (f == "gridlinewidth") d.grid_line_width = parse_length(value, Unit::Pt);
  else if (f == "gridcolor") d.grid_color = parse_color(value);
  else if (f == "gridopacity") d.grid_opacity = parse_number(value, key);
  else throw Error(ErrorKind::InvalidOption, "unknown plane style field '" + std::string(field) + "'");
  return d;
}

}  // namespace

Directive parse_directive(std::string_view key, std::string_view value, Unit default_unit) {
  std::string_view head = trim(key);
  std::string_view field;
  std::size_t dot = head.find('.');
  if (dot != std::string_view::npos) {
    field = trim(head.substr(dot + 1));
    head = trim(head.substr(0, dot));
  }
  std::string h = lower(head);

  if (h == "defaultunit") {
    auto unit = unit_from_name(trim(value));
    if (!unit) throw Error(ErrorKind::InvalidOption, "unknown unit '" + std::string(trim(value)) + "'");
    return SetDefaultUnit{*unit};
  }
  if (h == "distancescale") return SetDistanceScale{parse_number(value, key)};
  if (h == "layerdistance") return SetLayerDistance{parse_length(value, default_unit)};
  if (h == "coordinates") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "coordinates needs a field, e.g. Coordinates.xAngle");
    return parse_coordinates_field(field, value, key);
  }
  if (h == "vertexstyle") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "vertex style needs a field, e.g. VertexStyle.MinSize");
    return parse_vertex_style_field(field, value, default_unit, key);
  }
  if (h == "edgestyle") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "edge style needs a field, e.g. EdgeStyle.Color");
    return parse_edge_style_field(field, value, key);
  }
  if (h == "textstyle") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "text style needs a field, e.g. TextStyle.TextFont");
    return parse_text_style_field(field, value, key);
  }
  if (h == "planestyle") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "plane style needs a field, e.g. PlaneStyle.FillColor");
    return parse_plane_style_field(field, value, key);
  }
  if (h == "planewidth") return SetPlaneWidth{parse_length(value, default_unit)};
  if (h == "planeheight") return SetPlaneHeight{parse_length(value, default_unit)};
  if (h == "edgesinbg") return SetEdgesInBG{parse_bool(value, key)};
  if (h == "edgesnotinbg") return SetEdgesInBG{!parse_bool(value, key)};
  if (h == "color") {
    if (field.empty()) throw Error(ErrorKind::InvalidOption, "color definition needs a name, e.g. Color.mygray");
    ColorSpec spec = parse_color(value);
    if (spec.kind != ColorSpec::Kind::Triple) {
      throw Error(ErrorKind::InvalidOption, "color definitions take a {r,g,b} triple");
    }
    return DefineColor{std::string(field), spec.triple};
  }
  throw Error(ErrorKind::InvalidOption, "unknown setting '" + std::string(trim(key)) + "'");
}

}  // namespace netfig
