#include "netfig/svg_writer.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace netfig {

namespace {

constexpr double kPxPerCm = 96.0 / 2.54;
constexpr double kPxPerPt = 96.0 / 72.27;

double cm_to_px(double cm) { return cm * kPxPerCm; }

// Six decimals keeps round trips well under a micrometer of model space.
std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (out == "-0") out = "0";
  return out;
}

std::string fmt_px(double cm) { return fmt(cm_to_px(cm)); }

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string point_pair(const Point2& p) { return fmt_px(p.x) + " " + fmt_px(p.y); }

std::string curve_path(const Curve& curve) {
  std::string d;
  if (const auto* seg = std::get_if<Segment>(&curve)) {
    d = "M " + point_pair(seg->a) + " L " + point_pair(seg->b);
  } else if (const auto* arc = std::get_if<Arc>(&curve)) {
    Point2 from = curve_start(curve);
    Point2 to = curve_end(curve);
    const char* large = std::abs(arc->sweep) > std::numbers::pi ? "1" : "0";
    const char* sweep = arc->sweep > 0.0 ? "1" : "0";
    d = "M " + point_pair(from) + " A " + fmt_px(arc->radius) + " " + fmt_px(arc->radius) +
        " 0 " + large + " " + sweep + " " + point_pair(to);
  } else if (const auto* cubic = std::get_if<Cubic>(&curve)) {
    d = "M " + point_pair(cubic->p0) + " C " + point_pair(cubic->p1) + ", " +
        point_pair(cubic->p2) + ", " + point_pair(cubic->p3);
  } else if (const auto* poly = std::get_if<Polyline>(&curve)) {
    d = "M " + point_pair(poly->points.front());
    for (std::size_t i = 1; i < poly->points.size(); ++i) {
      d += " L " + point_pair(poly->points[i]);
    }
  }
  return d;
}

std::string stroke_attrs(const Rgb& color, double width_pt, double opacity) {
  std::string out = " stroke=\"" + color.hex() + "\" stroke-width=\"" +
                    fmt(width_pt * kPxPerPt) + "\"";
  if (opacity != 1.0) out += " stroke-opacity=\"" + fmt(opacity) + "\"";
  return out;
}

// text-anchor and baseline from a compass token; the token names the side of
// the text box that touches the anchor point.
std::string text_alignment(const std::string& anchor) {
  std::string out;
  if (anchor.find("west") != std::string::npos) {
    out += " text-anchor=\"start\"";
  } else if (anchor.find("east") != std::string::npos) {
    out += " text-anchor=\"end\"";
  } else {
    out += " text-anchor=\"middle\"";
  }
  if (anchor.find("north") != std::string::npos) {
    out += " dominant-baseline=\"hanging\"";
  } else if (anchor.find("south") == std::string::npos) {
    out += " dominant-baseline=\"central\"";
  }
  return out;
}

struct TextGeometry {
  double width_cm = 0.0;
  double height_cm = 0.0;
};

TextGeometry estimate_box(const std::string& text, double font_px) {
  TextGeometry g;
  g.width_cm = 0.6 * font_px * static_cast<double>(text.size()) / kPxPerCm;
  g.height_cm = 1.2 * font_px / kPxPerCm;
  return g;
}

void append_label(std::string& out, const LabelBox& label) {
  if (label.text.empty()) return;
  if (label.fill) {
    TextGeometry box = estimate_box(label.text, label.font_px);
    double x0 = label.point.x - box.width_cm / 2.0;
    if (label.anchor.find("west") != std::string::npos) x0 = label.point.x;
    if (label.anchor.find("east") != std::string::npos) x0 = label.point.x - box.width_cm;
    double y0 = label.point.y - box.height_cm / 2.0;
    if (label.anchor.find("north") != std::string::npos) y0 = label.point.y - box.height_cm;
    if (label.anchor.find("south") != std::string::npos) y0 = label.point.y;
    out += "    <rect x=\"" + fmt_px(x0) + "\" y=\"" + fmt_px(y0) + "\" width=\"" +
           fmt_px(box.width_cm) + "\" height=\"" + fmt_px(box.height_cm) + "\" fill=\"" +
           label.fill->hex() + "\"";
    if (label.fill_opacity != 1.0) out += " fill-opacity=\"" + fmt(label.fill_opacity) + "\"";
    out += "/>\n";
  }
  out += "    <text transform=\"translate(" + fmt_px(label.point.x) + "," +
         fmt_px(label.point.y) + ") scale(1,-1)";
  if (label.rotation_deg != 0.0) out += " rotate(" + fmt(-label.rotation_deg) + ")";
  out += "\" font-size=\"" + fmt(label.font_px) + "\" fill=\"" + label.color.hex() + "\"";
  if (label.opacity != 1.0) out += " fill-opacity=\"" + fmt(label.opacity) + "\"";
  if (label.math) out += " font-style=\"italic\"";
  out += text_alignment(label.anchor);
  out += ">" + escape(label.text) + "</text>\n";
}

void append_plane(std::string& out, const PlanePrim& plane) {
  std::string d = "M " + point_pair(plane.polygon[0]);
  for (int i = 1; i < 4; ++i) d += " L " + point_pair(plane.polygon[i]);
  d += " Z";
  out += "    <path d=\"" + d + "\" fill=\"" +
         (plane.fill ? plane.fill->hex() : std::string("none")) + "\"";
  if (plane.fill && plane.fill_opacity != 1.0) {
    out += " fill-opacity=\"" + fmt(plane.fill_opacity) + "\"";
  }
  if (plane.border) {
    out += stroke_attrs(*plane.border, plane.border_width_pt, plane.border_opacity);
  } else {
    out += " stroke=\"none\"";
  }
  out += "/>\n";
  if (plane.image) {
    // Maps the unit image square onto the projected rectangle, top edge at
    // the (x, y+h) corner so the picture is not mirrored by the y flip.
    Point2 origin = plane.polygon[3];
    Point2 u_axis = plane.polygon[2] - plane.polygon[3];
    Point2 v_axis = plane.polygon[0] - plane.polygon[3];
    out += "    <image href=\"" + escape(*plane.image) +
           "\" x=\"0\" y=\"0\" width=\"1\" height=\"1\" preserveAspectRatio=\"none\""
           " transform=\"matrix(" +
           fmt_px(u_axis.x) + " " + fmt_px(u_axis.y) + " " + fmt_px(v_axis.x) + " " +
           fmt_px(v_axis.y) + " " + fmt_px(origin.x) + " " + fmt_px(origin.y) + ")\"/>\n";
  }
  for (const auto& [a, b] : plane.grid_lines) {
    out += "    <line x1=\"" + fmt_px(a.x) + "\" y1=\"" + fmt_px(a.y) + "\" x2=\"" +
           fmt_px(b.x) + "\" y2=\"" + fmt_px(b.y) + "\"" +
           stroke_attrs(plane.grid_color, plane.grid_width_pt, plane.grid_opacity) + "/>\n";
  }
}

void append_edge(std::string& out, const EdgePrim& edge) {
  out += "    <path d=\"" + curve_path(edge.curve) + "\" fill=\"none\"" +
         stroke_attrs(edge.color, edge.width_pt, edge.opacity) + "/>\n";
  if (edge.arrowhead) {
    const auto& tri = *edge.arrowhead;
    out += "    <path d=\"M " + point_pair(tri[0]) + " L " + point_pair(tri[1]) + " L " +
           point_pair(tri[2]) + " Z\" fill=\"" + edge.color.hex() + "\"";
    if (edge.opacity != 1.0) out += " fill-opacity=\"" + fmt(edge.opacity) + "\"";
    out += " stroke=\"none\"/>\n";
  }
  if (edge.label) append_label(out, *edge.label);
}

void append_vertex(std::string& out, const VertexPrim& vertex) {
  std::string paint = " fill=\"" + (vertex.fill ? vertex.fill->hex() : std::string("none")) + "\"";
  if (vertex.fill && vertex.fill_opacity != 1.0) {
    paint += " fill-opacity=\"" + fmt(vertex.fill_opacity) + "\"";
  }
  if (vertex.border) {
    paint += stroke_attrs(*vertex.border, vertex.border_width_pt, vertex.border_opacity);
  } else {
    paint += " stroke=\"none\"";
  }

  if (vertex.shape == "rectangle") {
    out += "    <rect x=\"" + fmt_px(vertex.center.x - vertex.radius) + "\" y=\"" +
           fmt_px(vertex.center.y - vertex.radius) + "\" width=\"" +
           fmt_px(2.0 * vertex.radius) + "\" height=\"" + fmt_px(2.0 * vertex.radius) + "\"" +
           paint + "/>\n";
  } else if (vertex.shape == "diamond") {
    Point2 c = vertex.center;
    double r = vertex.radius;
    out += "    <path d=\"M " + point_pair({c.x, c.y + r}) + " L " + point_pair({c.x + r, c.y}) +
           " L " + point_pair({c.x, c.y - r}) + " L " + point_pair({c.x - r, c.y}) + " Z\"" +
           paint + "/>\n";
  } else {
    out += "    <circle cx=\"" + fmt_px(vertex.center.x) + "\" cy=\"" + fmt_px(vertex.center.y) +
           "\" r=\"" + fmt_px(vertex.radius) + "\"" + paint + "/>\n";
  }
  if (vertex.label) append_label(out, *vertex.label);
}

void append_text(std::string& out, const TextPrim& text) {
  out += "    <text transform=\"translate(" + fmt_px(text.point.x) + "," +
         fmt_px(text.point.y) + ") scale(1,-1)";
  if (text.rotation_deg != 0.0) out += " rotate(" + fmt(-text.rotation_deg) + ")";
  out += "\" font-size=\"" + fmt(text.font_px) + "\" fill=\"" + text.color.hex() + "\"";
  if (text.opacity != 1.0) out += " fill-opacity=\"" + fmt(text.opacity) + "\"";
  if (text.math) out += " font-style=\"italic\"";
  out += text_alignment(text.anchor);
  out += ">";

  if (text.wrap_width) {
    double char_cm = 0.6 * text.font_px / kPxPerCm;
    std::size_t capacity = std::max<std::size_t>(
        1, static_cast<std::size_t>(*text.wrap_width / char_cm));
    std::istringstream words(text.content);
    std::vector<std::string> lines(1);
    std::string word;
    while (words >> word) {
      if (!lines.back().empty() && lines.back().size() + 1 + word.size() > capacity) {
        lines.emplace_back();
      }
      if (!lines.back().empty()) lines.back() += ' ';
      lines.back() += word;
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out += "<tspan x=\"0\" dy=\"" + std::string(i == 0 ? "0" : "1.2em") + "\">" +
             escape(lines[i]) + "</tspan>";
    }
  } else {
    out += escape(text.content);
  }
  out += "</text>\n";
}

}  // namespace

std::string render_svg(const Scene& scene) {
  const SceneBounds& b = scene.bounds;
  double width = b.max_x - b.min_x;
  double height = b.max_y - b.min_y;

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt_px(width) + "\" height=\"" + fmt_px(height) + "\" viewBox=\"" + fmt_px(b.min_x) +
         " " + fmt_px(-b.max_y) + " " + fmt_px(width) + " " + fmt_px(height) + "\">\n";
  out += "  <g transform=\"scale(1,-1)\">\n";
  for (const auto& prim : scene.prims) {
    if (const auto* plane = std::get_if<PlanePrim>(&prim)) append_plane(out, *plane);
    else if (const auto* edge = std::get_if<EdgePrim>(&prim)) append_edge(out, *edge);
    else if (const auto* vertex = std::get_if<VertexPrim>(&prim)) append_vertex(out, *vertex);
    else if (const auto* text = std::get_if<TextPrim>(&prim)) append_text(out, *text);
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace netfig
