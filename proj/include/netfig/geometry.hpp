#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "netfig/options.hpp"
#include "netfig/settings.hpp"

namespace netfig {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  friend Point2 operator*(double s, const Point2& p) { return p * s; }
  friend bool operator==(const Point2&, const Point2&) = default;

  double norm() const;
};

double distance(const Point2& a, const Point2& b);

// Unit vector at an angle in degrees counterclockwise from +x. Multiples of
// 90 degrees evaluate exactly so identity projections stay exact.
Point2 unit_at(double angle_deg);

// Projected axis directions, already scaled by the axis lengths.
struct Basis {
  Point2 ex{1, 0};
  Point2 ey{0, 1};
  Point2 ez{0, 1};
};

Basis projection_basis(const Coordinates& coordinates);

// Maps model coordinates to the drawing plane:
//   p = distance_scale * (x * ex + y * ey) + layer_distance * (layer - 1) * ez
// Layers count from 1; callers pass layer_distance 0 when layer offsets are
// not wanted (flat and stacked-2d rendering).
Point2 project(const Basis& basis, double x, double y, int layer, double layer_distance,
               double distance_scale);

// Edge shapes in drawing coordinates (cm).
struct Segment {
  Point2 a, b;
};

// Circular arc from angle start_angle over a signed sweep (radians,
// positive = counterclockwise).
struct Arc {
  Point2 center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;
};

struct Cubic {
  Point2 p0, p1, p2, p3;
};

struct Polyline {
  std::vector<Point2> points;
};

using Curve = std::variant<Segment, Arc, Cubic, Polyline>;

Point2 curve_start(const Curve& curve);
Point2 curve_end(const Curve& curve);

// A positive bend bulges to the left of the a->b direction, mirroring the
// sign convention of bend angles in TikZ. The arc's radius is
// |ab| / (2 sin|bend|) and its signed sweep is -2 * bend.
// Throws Error{DegenerateEdge} when a == b, Error{InvalidOption} when
// |bend| >= 180. A zero bend yields a Segment.
Curve bend_curve(const Point2& a, const Point2& b, double bend_deg);

// Self-loop leaving and re-entering the vertex circle. The loop points in
// the loopposition direction (degrees counterclockwise from +x) and opens
// over loopshape degrees; its extent beyond the boundary is loopsize.
Curve loop_curve(const Point2& center, double radius, double loopsize_cm,
                 double loopposition_deg, double loopshape_deg);

// Removes the parts of the curve within r_a of its start point and r_b of
// its end point (circle intersection). Returns nullopt when nothing is left.
std::optional<Curve> clip_curve(const Curve& curve, double r_a, double r_b);

double curve_length(const Curve& curve);

struct PointTangent {
  Point2 point;
  double tangent_deg = 0.0;  // direction of travel, degrees ccw from +x
};

// Point at a fraction of the curve's arc length, t in [0,1]. Exact for
// segments and arcs; cubics and polylines resolve numerically to within
// 1e-6 of the total length.
PointTangent point_at_fraction(const Curve& curve, double t);

struct LabelAnchor {
  Point2 point;
  std::string anchor;  // TikZ-style compass token, e.g. "south west"
};

// Places a label around a circle of the given radius. Keyword and angle
// positions move the label outward by radius + distance (+ keyword offset)
// and anchor it on the box side facing the circle; the anchor direction is
// quantized to the nearest compass point.
LabelAnchor vertex_label_anchor(const Point2& center, double radius,
                                const LabelPosition& position, double distance_cm);

struct PlaneGeometry {
  std::array<Point2, 4> corners;  // (x,y), (x+w,y), (x+w,y+h), (x,y+h) projected
  std::vector<std::pair<Point2, Point2>> grid_lines;
};

// Rectangle with lower-left corner (x, y) on the given layer, projected
// through the basis. Grid lines sit at spacing multiples measured from the
// plane origin, strictly inside the rectangle (borders excluded).
PlaneGeometry plane_polygon(double x, double y, double width, double height, int layer,
                            std::optional<double> grid_spacing, const Basis& basis,
                            double layer_distance);

}  // namespace netfig
