#include "netfig/tex_writer.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace netfig {

namespace {

// Up to three decimals, trailing zeros and lone dot stripped: 5.650 -> 5.65,
// 2.000 -> 2, -8.531 stays.
std::string fmt_num(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string out(buf);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

std::string fmt_length(const Length& length, Unit unit) { return fmt_num(length.in(unit)); }

std::string fmt_pt(const Length& length) { return fmt_num(length.in(Unit::Pt)) + "pt"; }

bool needs_braces(const std::string& value) {
  return value.find_first_of(",=[]") != std::string::npos ||
         value.find(' ') != std::string::npos;
}

std::string braced(const std::string& value) {
  if (value.empty() || needs_braces(value)) return "{" + value + "}";
  return value;
}

std::string color_value(const ColorSpec& color) {
  if (color.kind == ColorSpec::Kind::Triple) {
    return "{" + std::to_string(color.triple.r) + "," + std::to_string(color.triple.g) + "," +
           std::to_string(color.triple.b) + "}";
  }
  return color.source_text;
}

std::string position_value(const LabelPosition& position) {
  switch (position.kind) {
    case LabelPosition::Kind::Center:
      return "center";
    case LabelPosition::Kind::Angle:
      return fmt_num(position.angle_deg);
    case LabelPosition::Kind::Keyword:
      return position.keyword;
  }
  return "center";
}

// Accumulates key=value pairs and flags, renders "[a=1,b,c=2]" or "".
class OptionList {
 public:
  void add(const std::string& key, const std::string& value) {
    items_.push_back(key + "=" + value);
  }
  void flag(const std::string& name) { items_.push_back(name); }

  std::string render() const {
    if (items_.empty()) return "";
    std::string out = "[";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += items_[i];
    }
    out += ']';
    return out;
  }

 private:
  std::vector<std::string> items_;
};

std::string waypoint_value(const Waypoint& w, Unit unit) {
  if (w.kind == Waypoint::Kind::Vertex) return w.id;
  return "{" + fmt_length(w.x, unit) + "," + fmt_length(w.y, unit) + "}";
}

std::string vertex_line(const VertexSpec& v, Unit unit) {
  OptionList opts;
  if (v.x) opts.add("x", fmt_length(*v.x, unit));
  if (v.y) opts.add("y", fmt_length(*v.y, unit));
  if (v.size) opts.add("size", fmt_length(*v.size, unit));
  if (v.rgb_mode && v.rgb) {
    opts.add("color", "{" + std::to_string(v.rgb->r) + "," + std::to_string(v.rgb->g) + "," +
                          std::to_string(v.rgb->b) + "}");
  } else if (v.color) {
    opts.add("color", color_value(*v.color));
  }
  if (v.opacity) opts.add("opacity", fmt_num(*v.opacity));
  if (v.shape) opts.add("shape", *v.shape);
  if (v.label) opts.add("label", braced(*v.label));
  if (v.fontsize) opts.add("fontsize", "\\" + *v.fontsize);
  if (v.fontcolor) opts.add("fontcolor", color_value(*v.fontcolor));
  if (v.fontscale) opts.add("fontscale", fmt_num(*v.fontscale));
  if (v.position) opts.add("position", position_value(*v.position));
  if (v.distance || (v.position && v.position->offset)) {
    Length total = v.distance.value_or(Length{0});
    if (v.position && v.position->offset) total.cm += v.position->offset->cm;
    opts.add("distance", fmt_length(total, unit));
  }
  if (v.style) opts.add("style", braced(*v.style));
  if (v.layer) opts.add("layer", std::to_string(*v.layer));
  if (v.no_label) opts.flag("NoLabel");
  if (v.id_as_label) opts.flag("IdAsLabel");
  if (v.math) opts.flag("Math");
  if (v.rgb_mode) opts.flag("RGB");
  if (v.pseudo) opts.flag("Pseudo");
  return "\\Vertex" + opts.render() + "{" + v.id + "}";
}

std::string edge_line(const EdgeSpec& e, Unit unit) {
  OptionList opts;
  if (e.lw) opts.add("lw", fmt_pt(*e.lw));
  if (e.rgb_mode && e.rgb) {
    opts.add("color", "{" + std::to_string(e.rgb->r) + "," + std::to_string(e.rgb->g) + "," +
                          std::to_string(e.rgb->b) + "}");
  } else if (e.color) {
    opts.add("color", color_value(*e.color));
  }
  if (e.opacity) opts.add("opacity", fmt_num(*e.opacity));
  if (e.bend) opts.add("bend", fmt_num(*e.bend));
  if (e.label) opts.add("label", braced(*e.label));
  if (e.fontsize) opts.add("fontsize", "\\" + *e.fontsize);
  if (e.fontcolor) opts.add("fontcolor", color_value(*e.fontcolor));
  if (e.fontscale) opts.add("fontscale", fmt_num(*e.fontscale));
  if (e.position) opts.add("position", position_value(*e.position));
  if (e.distance) opts.add("distance", fmt_num(*e.distance));
  if (e.style) opts.add("style", braced(*e.style));
  if (!e.path.empty()) {
    std::string value = "{";
    for (std::size_t i = 0; i < e.path.size(); ++i) {
      if (i) value += ',';
      value += waypoint_value(e.path[i], unit);
    }
    value += '}';
    opts.add("path", value);
  }
  if (e.loopsize) opts.add("loopsize", fmt_length(*e.loopsize, unit));
  if (e.loopposition) opts.add("loopposition", fmt_num(*e.loopposition));
  if (e.loopshape) opts.add("loopshape", fmt_num(*e.loopshape));
  if (e.direct) opts.flag("Direct");
  if (e.math) opts.flag("Math");
  if (e.rgb_mode) opts.flag("RGB");
  if (e.not_in_bg) opts.flag("NotInBG");
  return "\\Edge" + opts.render() + "(" + e.u + ")(" + e.v + ")";
}

std::string text_line(const TextSpec& t, Unit unit) {
  OptionList opts;
  if (t.x) opts.add("x", fmt_length(*t.x, unit));
  if (t.y) opts.add("y", fmt_length(*t.y, unit));
  if (t.fontsize) opts.add("fontsize", "\\" + *t.fontsize);
  if (t.rgb_mode && t.rgb) {
    opts.add("color", "{" + std::to_string(t.rgb->r) + "," + std::to_string(t.rgb->g) + "," +
                          std::to_string(t.rgb->b) + "}");
  } else if (t.color) {
    opts.add("color", color_value(*t.color));
  }
  if (t.opacity) opts.add("opacity", fmt_num(*t.opacity));
  if (t.position) opts.add("position", position_value(*t.position));
  if (t.distance || (t.position && t.position->offset)) {
    Length total = t.distance.value_or(Length{0});
    if (t.position && t.position->offset) total.cm += t.position->offset->cm;
    opts.add("distance", fmt_length(total, unit));
  }
  if (t.rotation) opts.add("rotation", fmt_num(*t.rotation));
  if (t.anchor) opts.add("anchor", braced(*t.anchor));
  if (t.width) opts.add("width", fmt_length(*t.width, unit));
  if (t.style) opts.add("style", braced(*t.style));
  if (t.layer) opts.add("layer", std::to_string(*t.layer));
  if (t.rgb_mode) opts.flag("RGB");
  return "\\Text" + opts.render() + "{" + t.content + "}";
}

std::string plane_line(const PlaneSpec& p, Unit unit) {
  OptionList opts;
  if (p.x) opts.add("x", fmt_length(*p.x, unit));
  if (p.y) opts.add("y", fmt_length(*p.y, unit));
  if (p.width) opts.add("width", fmt_length(*p.width, unit));
  if (p.height) opts.add("height", fmt_length(*p.height, unit));
  if (p.rgb_mode && p.rgb) {
    opts.add("color", "{" + std::to_string(p.rgb->r) + "," + std::to_string(p.rgb->g) + "," +
                          std::to_string(p.rgb->b) + "}");
  } else if (p.color) {
    opts.add("color", color_value(*p.color));
  }
  if (p.opacity) opts.add("opacity", fmt_num(*p.opacity));
  if (p.grid) opts.add("grid", fmt_length(*p.grid, unit));
  if (p.image) opts.add("image", braced(*p.image));
  if (p.style) opts.add("style", braced(*p.style));
  if (p.layer) opts.add("layer", std::to_string(*p.layer));
  if (p.rgb_mode) opts.flag("RGB");
  if (p.no_fill) opts.flag("NoFill");
  if (p.no_border) opts.flag("NoBorder");
  if (p.image_and_fill) opts.flag("ImageAndFill");
  if (p.in_bg) opts.flag("InBG");
  return "\\Plane" + opts.render();
}

void append_style_command(std::string& out, const char* name, const OptionList& opts) {
  std::string rendered = opts.render();
  if (rendered.empty()) return;
  out += std::string("\\Set") + name + rendered + "\n";
}

// Emits Set* lines for everything that differs from the defaults, in a fixed
// order so output is reproducible.
std::string settings_preamble(const Settings& settings) {
  const Settings defaults;
  Unit unit = settings.default_unit;
  std::string out;

  for (const auto& [name, rgb] : settings.palette.entries()) {
    auto standard = defaults.palette.find(name);
    if (!standard || !(*standard == rgb)) {
      out += "\\definecolor{" + name + "}{RGB}{" + std::to_string(rgb.r) + "," +
             std::to_string(rgb.g) + "," + std::to_string(rgb.b) + "}\n";
    }
  }

  if (settings.default_unit != defaults.default_unit) {
    out += std::string("\\SetDefaultUnit{") + unit_name(settings.default_unit) + "}\n";
  }
  if (settings.distance_scale != defaults.distance_scale) {
    out += "\\SetDistanceScale{" + fmt_num(settings.distance_scale) + "}\n";
  }
  {
    OptionList coords;
    const Coordinates& c = settings.coordinates;
    const Coordinates& d = defaults.coordinates;
    if (c.x_angle != d.x_angle) coords.add("xAngle", fmt_num(c.x_angle));
    if (c.y_angle != d.y_angle) coords.add("yAngle", fmt_num(c.y_angle));
    if (c.z_angle != d.z_angle) coords.add("zAngle", fmt_num(c.z_angle));
    if (c.x_length != d.x_length) coords.add("xLength", fmt_num(c.x_length));
    if (c.y_length != d.y_length) coords.add("yLength", fmt_num(c.y_length));
    if (c.z_length != d.z_length) coords.add("zLength", fmt_num(c.z_length));
    std::string rendered = coords.render();
    if (!rendered.empty()) out += "\\SetCoordinates" + rendered + "\n";
  }
  if (settings.layer_distance) {
    out += "\\SetLayerDistance{" + fmt_length(*settings.layer_distance, unit) + "}\n";
  }
  {
    OptionList o;
    const VertexStyle& v = settings.vertex_style;
    const VertexStyle d;
    if (v.shape != d.shape) o.add("Shape", v.shape);
    if (!(v.inner_sep == d.inner_sep)) o.add("InnerSep", fmt_pt(v.inner_sep));
    if (!(v.outer_sep == d.outer_sep)) o.add("OuterSep", fmt_pt(v.outer_sep));
    if (v.min_size) o.add("MinSize", fmt_length(*v.min_size, unit));
    if (!(v.fill_color == d.fill_color)) o.add("FillColor", color_value(v.fill_color));
    if (v.fill_opacity != d.fill_opacity) o.add("FillOpacity", fmt_num(v.fill_opacity));
    if (!(v.line_width == d.line_width)) o.add("LineWidth", fmt_pt(v.line_width));
    if (!(v.line_color == d.line_color)) o.add("LineColor", color_value(v.line_color));
    if (v.line_opacity != d.line_opacity) o.add("LineOpacity", fmt_num(v.line_opacity));
    if (v.text_font != d.text_font) o.add("TextFont", "\\" + v.text_font);
    if (!(v.text_color == d.text_color)) o.add("TextColor", color_value(v.text_color));
    if (v.text_opacity != d.text_opacity) o.add("TextOpacity", fmt_num(v.text_opacity));
    if (v.text_rotation != d.text_rotation) o.add("TextRotation", fmt_num(v.text_rotation));
    append_style_command(out, "VertexStyle", o);
  }
  {
    OptionList o;
    const EdgeStyle& e = settings.edge_style;
    const EdgeStyle d;
    if (!(e.line_width == d.line_width)) o.add("LineWidth", fmt_pt(e.line_width));
    if (!(e.color == d.color)) o.add("Color", color_value(e.color));
    if (e.opacity != d.opacity) o.add("Opacity", fmt_num(e.opacity));
    if (e.arrow != d.arrow) o.add("Arrow", braced(e.arrow));
    if (e.text_font != d.text_font) o.add("TextFont", "\\" + e.text_font);
    if (!(e.text_color == d.text_color)) o.add("TextColor", color_value(e.text_color));
    if (e.text_opacity != d.text_opacity) o.add("TextOpacity", fmt_num(e.text_opacity));
    if (!(e.text_fill_color == d.text_fill_color)) o.add("TextFillColor", color_value(e.text_fill_color));
    if (e.text_fill_opacity != d.text_fill_opacity) o.add("TextFillOpacity", fmt_num(e.text_fill_opacity));
    if (!(e.inner_sep == d.inner_sep)) o.add("InnerSep", fmt_pt(e.inner_sep));
    if (!(e.outer_sep == d.outer_sep)) o.add("OuterSep", fmt_pt(e.outer_sep));
    if (e.text_rotation != d.text_rotation) o.add("TextRotation", fmt_num(e.text_rotation));
    append_style_command(out, "EdgeStyle", o);
  }
  {
    OptionList o;
    const TextStyle& t = settings.text_style;
    const TextStyle d;
    if (t.text_font != d.text_font) o.add("TextFont", "\\" + t.text_font);
    if (!(t.text_color == d.text_color)) o.add("TextColor", color_value(t.text_color));
    if (t.text_opacity != d.text_opacity) o.add("TextOpacity", fmt_num(t.text_opacity));
    if (!(t.inner_sep == d.inner_sep)) o.add("InnerSep", fmt_pt(t.inner_sep));
    if (!(t.outer_sep == d.outer_sep)) o.add("OuterSep", fmt_pt(t.outer_sep));
    if (t.text_rotation != d.text_rotation) o.add("TextRotation", fmt_num(t.text_rotation));
    append_style_command(out, "TextStyle", o);
  }
  {
    OptionList o;
    const PlaneStyle& p = settings.plane_style;
    const PlaneStyle d;
    if (!(p.line_width == d.line_width)) o.add("LineWidth", fmt_pt(p.line_width));
    if (!(p.line_color == d.line_color)) o.add("LineColor", color_value(p.line_color));
    if (p.line_opacity != d.line_opacity) o.add("LineOpacity", fmt_num(p.line_opacity));
    if (!(p.fill_color == d.fill_color)) o.add("FillColor", color_value(p.fill_color));
    if (p.fill_opacity != d.fill_opacity) o.add("FillOpacity", fmt_num(p.fill_opacity));
    if (!(p.grid_line_width == d.grid_line_width)) o.add("GridLineWidth", fmt_pt(p.grid_line_width));
    if (!(p.grid_color == d.grid_color)) o.add("GridColor", color_value(p.grid_color));
    if (p.grid_opacity != d.grid_opacity) o.add("GridOpacity", fmt_num(p.grid_opacity));
    append_style_command(out, "PlaneStyle", o);
  }
  if (!(settings.plane_width == defaults.plane_width)) {
    out += "\\SetPlaneWidth{" + fmt_length(settings.plane_width, unit) + "}\n";
  }
  if (!(settings.plane_height == defaults.plane_height)) {
    out += "\\SetPlaneHeight{" + fmt_length(settings.plane_height, unit) + "}\n";
  }
  if (settings.edges_in_bg != defaults.edges_in_bg) {
    out += "\\EdgesNotInBG\n";
  }
  return out;
}

}  // namespace

std::string emit_tex(const Network& network, const Settings& settings,
                     const TexOptions& options) {
  Unit unit = settings.default_unit;
  std::string out;
  if (options.standalone) {
    out += "\\documentclass{standalone}\n";
    out += "\\usepackage{tikz-network}\n";
    out += "\\begin{document}\n";
  }
  out += settings_preamble(settings);

  out += "\\begin{tikzpicture}";
  if (settings.mode == RenderMode::Multilayer2D) out += "[multilayer]";
  if (settings.mode == RenderMode::Multilayer3D) out += "[multilayer=3d]";
  out += "\n";
  if (options.clip) {
    out += "\\clip (" + fmt_num(options.clip->x0) + "," + fmt_num(options.clip->y0) +
           ") rectangle (" + fmt_num(options.clip->x1) + "," + fmt_num(options.clip->y1) + ");\n";
  }

  for (const auto& v : network.vertices) out += vertex_line(v, unit) + "\n";
  for (const auto& e : network.edges) out += edge_line(e, unit) + "\n";
  for (const auto& t : network.texts) out += text_line(t, unit) + "\n";
  for (const auto& p : network.planes) out += plane_line(p, unit) + "\n";
  for (const auto& block : network.layer_blocks) {
    out += "\\begin{Layer}[layer=" + std::to_string(block.layer) + "]\n";
    out += block.raw_tex;
    if (!block.raw_tex.empty() && block.raw_tex.back() != '\n') out += "\n";
    out += "\\end{Layer}\n";
  }

  out += "\\end{tikzpicture}\n";
  if (options.standalone) out += "\\end{document}\n";
  return out;
}

}  // namespace netfig
