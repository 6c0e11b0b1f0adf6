#include "netfig/resolve.hpp"

namespace netfig {

namespace {

ColorSpec triple_spec(const Rgb& rgb) {
  ColorSpec spec;
  spec.kind = ColorSpec::Kind::Triple;
  spec.triple = rgb;
  spec.source_text = "{" + std::to_string(rgb.r) + "," + std::to_string(rgb.g) + "," +
                     std::to_string(rgb.b) + "}";
  return spec;
}

// R/G/B columns override the color column when the RGB flag is on.
ColorSpec pick_color(const std::optional<ColorSpec>& color, bool rgb_mode,
                     const std::optional<Rgb>& rgb, const ColorSpec& fallback) {
  if (rgb_mode && rgb) return triple_spec(*rgb);
  if (color) return *color;
  return fallback;
}

}  // namespace

ResolvedVertex resolve_vertex(const VertexSpec& spec, const Settings& settings) {
  const VertexStyle& style = settings.vertex_style;
  ResolvedVertex out;
  out.id = spec.id;
  out.x = (spec.x ? spec.x->cm : 0.0) * settings.distance_scale;
  out.y = (spec.y ? spec.y->cm : 0.0) * settings.distance_scale;
  out.layer = spec.layer.value_or(1);
  double diameter = spec.size ? spec.size->cm : settings.effective_min_size().cm;
  out.radius = spec.pseudo ? 0.0 : diameter / 2.0;
  out.shape = spec.shape.value_or(style.shape);
  out.fill_color = pick_color(spec.color, spec.rgb_mode, spec.rgb, style.fill_color);
  out.fill_rgb = resolve_rgb(out.fill_color, settings.palette);
  out.fill_opacity = spec.opacity.value_or(style.fill_opacity);
  out.line_width = style.line_width;
  out.line_rgb = resolve_rgb(style.line_color, settings.palette);
  out.line_opacity = style.line_opacity;
  if (spec.no_label) {
    out.label = std::nullopt;
  } else if (spec.id_as_label) {
    out.label = spec.id;
  } else {
    out.label = spec.label;
  }
  out.math_label = spec.math;
  out.font_size = spec.fontsize.value_or(style.text_font);
  out.font_scale = spec.fontscale.value_or(1.0);
  out.font_rgb = resolve_rgb(spec.fontcolor.value_or(style.text_color), settings.palette);
  out.text_opacity = style.text_opacity;
  out.text_rotation = style.text_rotation;
  out.position = spec.position.value_or(LabelPosition::center());
  out.label_distance = spec.distance.value_or(Length{0});
  out.style = spec.style;
  out.pseudo = spec.pseudo;
  return out;
}

VertexSpec ResolvedVertex::as_spec(const Settings& settings) const {
  VertexSpec spec;
  spec.id = id;
  spec.x = Length::centimeters(x / settings.distance_scale);
  spec.y = Length::centimeters(y / settings.distance_scale);
  if (!pseudo) spec.size = Length::centimeters(radius * 2.0);
  spec.color = fill_color;
  spec.opacity = fill_opacity;
  spec.shape = shape;
  if (label) {
    spec.label = *label;
  } else {
    spec.no_label = true;
  }
  spec.math = math_label;
  spec.fontsize = font_size;
  spec.fontcolor = triple_spec(font_rgb);
  spec.fontscale = font_scale;
  spec.position = position;
  spec.distance = label_distance;
  spec.style = style;
  spec.layer = layer;
  spec.pseudo = pseudo;
  return spec;
}

ResolvedEdge resolve_edge(const EdgeSpec& spec, const Settings& settings,
                          const Network& network) {
  (void)network;
  const EdgeStyle& style = settings.edge_style;
  ResolvedEdge out;
  out.u = spec.u;
  out.v = spec.v;
  out.line_width = spec.lw.value_or(style.line_width);
  out.color_rgb =
      resolve_rgb(pick_color(spec.color, spec.rgb_mode, spec.rgb, style.color), settings.palette);
  out.opacity = spec.opacity.value_or(style.opacity);
  out.bend = spec.bend.value_or(0.0);
  out.label = spec.label;
  out.math_label = spec.math;
  out.font_size = spec.fontsize.value_or(style.text_font);
  out.font_scale = spec.fontscale.value_or(1.0);
  out.font_rgb = resolve_rgb(spec.fontcolor.value_or(style.text_color), settings.palette);
  out.text_opacity = style.text_opacity;
  out.text_fill_rgb = resolve_rgb(style.text_fill_color, settings.palette);
  out.text_fill_opacity = style.text_fill_opacity;
  out.text_rotation = style.text_rotation;
  out.position = spec.position.value_or(LabelPosition::center());
  out.label_fraction = spec.distance.value_or(0.5);
  out.style = spec.style;
  out.path = spec.path;
  out.loopsize = spec.loopsize.value_or(Length::centimeters(1));
  out.loopposition = spec.loopposition.value_or(0.0);
  out.loopshape = spec.loopshape.value_or(90.0);
  out.directed = spec.direct;
  out.arrow = style.arrow;
  out.in_background = spec.not_in_bg ? false : settings.edges_in_bg;
  out.self_loop = spec.self_loop();
  return out;
}

ResolvedText resolve_text(const TextSpec& spec, const Settings& settings) {
  const TextStyle& style = settings.text_style;
  ResolvedText out;
  out.content = spec.content;
  out.x = (spec.x ? spec.x->cm : 0.0) * settings.distance_scale;
  out.y = (spec.y ? spec.y->cm : 0.0) * settings.distance_scale;
  out.layer = spec.layer.value_or(1);
  out.font_size = spec.fontsize.value_or(style.text_font);
  out.font_scale = 1.0;
  out.color_rgb =
      resolve_rgb(pick_color(spec.color, spec.rgb_mode, spec.rgb, style.text_color),
                  settings.palette);
  out.opacity = spec.opacity.value_or(style.text_opacity);
  out.position = spec.position.value_or(LabelPosition::center());
  out.distance = spec.distance.value_or(Length{0});
  out.rotation = spec.rotation.value_or(style.text_rotation);
  out.anchor = spec.anchor;
  out.width = spec.width;
  out.style = spec.style;
  return out;
}

ResolvedPlane resolve_plane(const PlaneSpec& spec, const Settings& settings) {
  const PlaneStyle& style = settings.plane_style;
  ResolvedPlane out;
  out.x = (spec.x ? spec.x->cm : 0.0) * settings.distance_scale;
  out.y = (spec.y ? spec.y->cm : 0.0) * settings.distance_scale;
  out.width = (spec.width ? *spec.width : settings.plane_width).cm;
  out.height = (spec.height ? *spec.height : settings.plane_height).cm;
  out.layer = spec.layer.value_or(1);
  bool image_covers = spec.image && !spec.image_and_fill;
  out.fill = !spec.no_fill && !image_covers;
  out.fill_rgb =
      resolve_rgb(pick_color(spec.color, spec.rgb_mode, spec.rgb, style.fill_color),
                  settings.palette);
  out.fill_opacity = spec.opacity.value_or(style.fill_opacity);
  out.border = !spec.no_border;
  out.line_width = style.line_width;
  out.line_rgb = resolve_rgb(style.line_color, settings.palette);
  out.line_opacity = style.line_opacity;
  if (spec.grid) out.grid = spec.grid->cm;
  out.grid_line_width = style.grid_line_width;
  out.grid_rgb = resolve_rgb(style.grid_color, settings.palette);
  out.grid_opacity = style.grid_opacity;
  out.image = spec.image;
  out.image_and_fill = spec.image_and_fill;
  out.in_background = spec.in_bg;
  out.style = spec.style;
  return out;
}

}  // namespace netfig
