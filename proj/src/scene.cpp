#include "netfig/scene.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "netfig/errors.hpp"
#include "netfig/resolve.hpp"

namespace netfig {

double map_fontsize(std::string_view size_command, double fontscale) {
  static const std::map<std::string, double, std::less<>> kSizesPt = {
      {"tiny", 5.0},     {"scriptsize", 7.0}, {"footnotesize", 8.0}, {"small", 9.0},
      {"normalsize", 10.0}, {"large", 12.0},  {"Large", 14.4},       {"LARGE", 17.28},
      {"huge", 20.74},   {"Huge", 24.88}};
  auto it = kSizesPt.find(size_command);
  if (it == kSizesPt.end()) {
    throw Error(ErrorKind::InvalidOption,
                "unknown font size '" + std::string(size_command) + "'");
  }
  return it->second * fontscale * 96.0 / 72.27;
}

namespace {

constexpr double kMarginCm = 0.25;
constexpr double kPxPerCm = 96.0 / 2.54;

double px_to_cm(double px) { return px / kPxPerCm; }

// Strips a fully $-wrapped string, reporting whether it was math.
std::pair<std::string, bool> split_math(const std::string& text, bool math_flag) {
  if (text.size() >= 2 && text.front() == '$' && text.back() == '$') {
    return {text.substr(1, text.size() - 2), true};
  }
  return {text, math_flag};
}

struct BoundsTracker {
  bool any = false;
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  void add(const Point2& p) {
    if (!any) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      any = true;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }

  void add_box(const Point2& center, double half_w, double half_h) {
    add({center.x - half_w, center.y - half_h});
    add({center.x + half_w, center.y + half_h});
  }

  SceneBounds finish() const {
    SceneBounds b;
    b.min_x = min_x - kMarginCm;
    b.min_y = min_y - kMarginCm;
    b.max_x = max_x + kMarginCm;
    b.max_y = max_y + kMarginCm;
    return b;
  }
};

void track_label(BoundsTracker& bounds, const LabelBox& label) {
  double char_w = px_to_cm(0.6 * label.font_px);
  double half_w = char_w * static_cast<double>(label.text.size()) / 2.0;
  double half_h = px_to_cm(label.font_px) * 0.6;
  bounds.add_box(label.point, half_w, half_h);
}

void track_curve(BoundsTracker& bounds, const Curve& curve) {
  if (const auto* seg = std::get_if<Segment>(&curve)) {
    bounds.add(seg->a);
    bounds.add(seg->b);
  } else if (const auto* arc = std::get_if<Arc>(&curve)) {
    for (int i = 0; i <= 32; ++i) {
      double phi = arc->start_angle + arc->sweep * i / 32.0;
      bounds.add(arc->center + Point2{std::cos(phi), std::sin(phi)} * arc->radius);
    }
  } else if (const auto* cubic = std::get_if<Cubic>(&curve)) {
    bounds.add(cubic->p0);
    bounds.add(cubic->p1);
    bounds.add(cubic->p2);
    bounds.add(cubic->p3);
  } else if (const auto* poly = std::get_if<Polyline>(&curve)) {
    for (const auto& p : poly->points) bounds.add(p);
  }
}

// Everything needed while assembling one edge primitive.
struct EdgeContext {
  const Basis& basis;
  const Settings& settings;
  double layer_distance;  // 0 outside 3d mode
  const std::map<std::string, ResolvedVertex>& vertices;
  std::vector<std::string>& warnings;
};

std::optional<EdgePrim> build_edge(const ResolvedEdge& edge, const EdgeContext& ctx) {
  const ResolvedVertex& from = ctx.vertices.at(edge.u);
  const ResolvedVertex& to = ctx.vertices.at(edge.v);
  Point2 p_from = project(ctx.basis, from.x, from.y, from.layer, ctx.layer_distance, 1.0);
  Point2 p_to = project(ctx.basis, to.x, to.y, to.layer, ctx.layer_distance, 1.0);

  std::optional<Curve> curve;
  if (edge.self_loop) {
    curve = loop_curve(p_from, from.radius, edge.loopsize.cm, edge.loopposition, edge.loopshape);
  } else if (!edge.path.empty()) {
    Polyline poly;
    poly.points.push_back(p_from);
    for (const auto& w : edge.path) {
      if (w.kind == Waypoint::Kind::Vertex) {
        const ResolvedVertex& via = ctx.vertices.at(w.id);
        poly.points.push_back(
            project(ctx.basis, via.x, via.y, via.layer, ctx.layer_distance, 1.0));
      } else {
        // Literal waypoints share the source vertex's layer.
        poly.points.push_back(project(ctx.basis, w.x.cm, w.y.cm, from.layer,
                                      ctx.layer_distance, ctx.settings.distance_scale));
      }
    }
    poly.points.push_back(p_to);
    curve = clip_curve(poly, from.radius, to.radius);
  } else {
    Curve bent = bend_curve(p_from, p_to, edge.bend);
    curve = clip_curve(bent, from.radius, to.radius);
  }
  if (!curve) {
    ctx.warnings.push_back("edge (" + edge.u + "," + edge.v +
                           ") vanishes inside its endpoints; skipped");
    return std::nullopt;
  }

  EdgePrim prim;
  prim.u = edge.u;
  prim.v = edge.v;
  prim.curve = *curve;
  prim.width_pt = edge.line_width.in(Unit::Pt);
  prim.color = edge.color_rgb;
  prim.opacity = edge.opacity;
  prim.layer = std::max(from.layer, to.layer);
  prim.background = edge.in_background;
  prim.intra_layer = from.layer == to.layer;

  if (edge.directed) {
    PointTangent tip = point_at_fraction(*curve, 1.0);
    double length = 4.0 * edge.line_width.cm;
    double half_width = 1.5 * edge.line_width.cm;
    Point2 dir = unit_at(tip.tangent_deg);
    Point2 normal{-dir.y, dir.x};
    Point2 base = tip.point - dir * length;
    prim.arrowhead = {tip.point, base + normal * half_width, base - normal * half_width};
  }

  if (edge.label) {
    PointTangent at = point_at_fraction(*curve, edge.label_fraction);
    double offset = 0.0;
    if (edge.position.kind == LabelPosition::Kind::Keyword && edge.position.offset) {
      offset = edge.position.offset->cm;
    }
    LabelAnchor anchor = vertex_label_anchor(at.point, 0.0, edge.position, offset);
    auto [text, math] = split_math(*edge.label, edge.math_label);
    LabelBox label;
    label.point = anchor.point;
    label.text = text;
    label.math = math;
    label.font_px = map_fontsize(edge.font_size, edge.font_scale);
    label.color = edge.font_rgb;
    label.opacity = edge.text_opacity;
    label.fill = edge.text_fill_rgb;
    label.fill_opacity = edge.text_fill_opacity;
    label.rotation_deg = edge.text_rotation;
    label.anchor = anchor.anchor;
    prim.label = label;
  }
  return prim;
}

const std::set<std::string> kNativeShapes = {"circle", "rectangle", "diamond"};
const std::set<std::string> kFallbackShapes = {"trapezium", "semicircle", "isosceles triangle"};

}  // namespace

Scene scene_build(const Network& network, const Settings& settings) {
  Scene scene;
  Basis basis = projection_basis(settings.coordinates);
  bool layered = settings.mode == RenderMode::Multilayer3D;
  double layer_distance = layered ? settings.effective_layer_distance().cm : 0.0;

  std::map<std::string, ResolvedVertex> resolved;
  std::vector<const VertexSpec*> order;
  for (const auto& spec : network.vertices) {
    if (settings.mode != RenderMode::Flat && !spec.layer) {
      scene.warnings.push_back("vertex '" + spec.id + "' has no layer; assuming layer 1");
    }
    resolved.emplace(spec.id, resolve_vertex(spec, settings));
    order.push_back(&spec);
  }

  // Vertex primitives grouped by layer, in declaration order.
  std::map<int, std::vector<VertexPrim>, std::greater<>> vertices_by_layer;
  for (const VertexSpec* spec : order) {
    const ResolvedVertex& v = resolved.at(spec->id);
    if (v.pseudo) continue;
    if (!kNativeShapes.count(v.shape)) {
      if (kFallbackShapes.count(v.shape)) {
        scene.warnings.push_back("shape '" + v.shape + "' on vertex '" + v.id +
                                 "' falls back to a circle");
      } else {
        throw Error(ErrorKind::InvalidOption,
                    "unknown shape '" + v.shape + "' on vertex '" + v.id + "'");
      }
    }
    VertexPrim prim;
    prim.id = v.id;
    prim.center = project(basis, v.x, v.y, v.layer, layer_distance, 1.0);
    prim.radius = v.radius;
    prim.shape = kNativeShapes.count(v.shape) ? v.shape : "circle";
    prim.fill = v.fill_rgb;
    prim.fill_opacity = v.fill_opacity;
    prim.border = v.line_rgb;
    prim.border_width_pt = v.line_width.in(Unit::Pt);
    prim.border_opacity = v.line_opacity;
    prim.layer = v.layer;
    if (v.label) {
      LabelAnchor anchor =
          vertex_label_anchor(prim.center, v.radius, v.position, v.label_distance.cm);
      auto [text, math] = split_math(*v.label, v.math_label);
      LabelBox label;
      label.point = anchor.point;
      label.text = text;
      label.math = math;
      label.font_px = map_fontsize(v.font_size, v.font_scale);
      label.color = v.font_rgb;
      label.opacity = v.text_opacity;
      label.rotation_deg = v.text_rotation;
      label.anchor = anchor.anchor;
      prim.label = label;
    }
    if (v.style) {
      scene.warnings.push_back("style '" + *v.style + "' on vertex '" + v.id +
                               "' is TeX-only; ignored");
    }
    vertices_by_layer[v.layer].push_back(std::move(prim));
  }

  // Edges resolved up front, split into the three paint groups.
  EdgeContext ctx{basis, settings, layer_distance, resolved, scene.warnings};
  std::vector<EdgePrim> background;
  std::map<int, std::vector<EdgePrim>, std::greater<>> foreground_intra;
  std::vector<EdgePrim> foreground_inter;
  for (const auto& spec : network.edges) {
    ResolvedEdge edge = resolve_edge(spec, settings, network);
    if (edge.style) {
      scene.warnings.push_back("style '" + *edge.style + "' on edge (" + edge.u + "," +
                               edge.v + ") is TeX-only; ignored");
    }
    auto prim = build_edge(edge, ctx);
    if (!prim) continue;
    if (prim->background) {
      background.push_back(std::move(*prim));
    } else if (prim->intra_layer) {
      foreground_intra[prim->layer].push_back(std::move(*prim));
    } else {
      foreground_inter.push_back(std::move(*prim));
    }
  }
  std::stable_sort(background.begin(), background.end(),
                   [](const EdgePrim& a, const EdgePrim& b) { return a.layer > b.layer; });

  // Paint order: planes, background edges, per-layer stacks, inter-layer
  // foreground edges, texts.
  std::vector<ResolvedPlane> planes;
  for (const auto& spec : network.planes) planes.push_back(resolve_plane(spec, settings));
  std::stable_sort(planes.begin(), planes.end(),
                   [](const ResolvedPlane& a, const ResolvedPlane& b) { return a.layer > b.layer; });
  for (const auto& plane : planes) {
    PlaneGeometry geometry = plane_polygon(plane.x, plane.y, plane.width, plane.height,
                                           plane.layer, plane.grid, basis, layer_distance);
    PlanePrim prim;
    prim.polygon = geometry.corners;
    if (plane.fill) prim.fill = plane.fill_rgb;
    prim.fill_opacity = plane.fill_opacity;
    if (plane.border) prim.border = plane.line_rgb;
    prim.border_width_pt = plane.line_width.in(Unit::Pt);
    prim.border_opacity = plane.line_opacity;
    prim.grid_lines = std::move(geometry.grid_lines);
    prim.grid_width_pt = plane.grid_line_width.in(Unit::Pt);
    prim.grid_color = plane.grid_rgb;
    prim.grid_opacity = plane.grid_opacity;
    prim.image = plane.image;
    prim.layer = plane.layer;
    if (plane.style) {
      scene.warnings.push_back("style '" + *plane.style + "' on a plane is TeX-only; ignored");
    }
    scene.prims.emplace_back(std::move(prim));
  }

  for (auto& prim : background) scene.prims.emplace_back(std::move(prim));

  std::set<int> layers;
  for (const auto& [id, v] : resolved) layers.insert(v.layer);
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    int layer = *it;
    if (auto found = vertices_by_layer.find(layer); found != vertices_by_layer.end()) {
      for (auto& prim : found->second) scene.prims.emplace_back(std::move(prim));
    }
    if (auto found = foreground_intra.find(layer); found != foreground_intra.end()) {
      for (auto& prim : found->second) scene.prims.emplace_back(std::move(prim));
    }
  }
  for (auto& prim : foreground_inter) scene.prims.emplace_back(std::move(prim));

  for (const auto& spec : network.texts) {
    ResolvedText text = resolve_text(spec, settings);
    Point2 at = project(basis, text.x, text.y, text.layer, layer_distance, 1.0);
    LabelAnchor anchor = vertex_label_anchor(at, 0.0, text.position, text.distance.cm);
    auto [content, math] = split_math(text.content, false);
    TextPrim prim;
    prim.point = anchor.point;
    prim.content = content;
    prim.math = math;
    prim.font_px = map_fontsize(text.font_size, text.font_scale);
    prim.color = text.color_rgb;
    prim.opacity = text.opacity;
    prim.rotation_deg = text.rotation;
    prim.anchor = text.anchor.value_or(anchor.anchor);
    if (text.width) prim.wrap_width = text.width->cm;
    prim.layer = text.layer;
    if (text.style) {
      scene.warnings.push_back("style '" + *text.style + "' on a text is TeX-only; ignored");
    }
    scene.prims.emplace_back(std::move(prim));
  }

  for (const auto& block : network.layer_blocks) {
    scene.warnings.push_back("layer block on layer " + std::to_string(block.layer) +
                             " contains raw TeX; skipped");
  }

  BoundsTracker bounds;
  for (const auto& prim : scene.prims) {
    if (const auto* plane = std::get_if<PlanePrim>(&prim)) {
      for (const auto& corner : plane->polygon) bounds.add(corner);
      for (const auto& [a, b] : plane->grid_lines) {
        bounds.add(a);
        bounds.add(b);
      }
    } else if (const auto* edge = std::get_if<EdgePrim>(&prim)) {
      track_curve(bounds, edge->curve);
      if (edge->arrowhead) {
        for (const auto& corner : *edge->arrowhead) bounds.add(corner);
      }
      if (edge->label) track_label(bounds, *edge->label);
    } else if (const auto* vertex = std::get_if<VertexPrim>(&prim)) {
      bounds.add_box(vertex->center, vertex->radius, vertex->radius);
      if (vertex->label) track_label(bounds, *vertex->label);
    } else if (const auto* text = std::get_if<TextPrim>(&prim)) {
      LabelBox probe;
      probe.point = text->point;
      probe.text = text->content;
      probe.font_px = text->font_px;
      track_label(bounds, probe);
    }
  }
  if (!bounds.any) bounds.add({0, 0});
  scene.bounds = bounds.finish();
  return scene;
}

}  // namespace netfig
