#include "netfig/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netfig/errors.hpp"

namespace netfig {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace

double Point2::norm() const { return std::hypot(x, y); }

double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

Point2 unit_at(double angle_deg) {
  double quarter = std::fmod(angle_deg, 360.0);
  if (quarter < 0.0) quarter += 360.0;
  if (quarter == 0.0) return {1, 0};
  if (quarter == 90.0) return {0, 1};
  if (quarter == 180.0) return {-1, 0};
  if (quarter == 270.0) return {0, -1};
  double rad = deg_to_rad(angle_deg);
  return {std::cos(rad), std::sin(rad)};
}

Basis projection_basis(const Coordinates& coordinates) {
  Basis basis;
  basis.ex = unit_at(coordinates.x_angle) * coordinates.x_length;
  basis.ey = unit_at(coordinates.y_angle) * coordinates.y_length;
  basis.ez = unit_at(coordinates.z_angle) * coordinates.z_length;
  return basis;
}

Point2 project(const Basis& basis, double x, double y, int layer, double layer_distance,
               double distance_scale) {
  Point2 planar = basis.ex * (distance_scale * x) + basis.ey * (distance_scale * y);
  double z = layer_distance * (layer - 1);
  if (z == 0.0) return planar;
  return planar + basis.ez * z;
}

Point2 curve_start(const Curve& curve) {
  return std::visit(
      [](const auto& c) -> Point2 {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Segment>) return c.a;
        else if constexpr (std::is_same_v<T, Arc>)
          return c.center + unit_at(rad_to_deg(c.start_angle)) * c.radius;
        else if constexpr (std::is_same_v<T, Cubic>) return c.p0;
        else return c.points.front();
      },
      curve);
}

Point2 curve_end(const Curve& curve) {
  return std::visit(
      [](const auto& c) -> Point2 {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Segment>) return c.b;
        else if constexpr (std::is_same_v<T, Arc>)
          return c.center + unit_at(rad_to_deg(c.start_angle + c.sweep)) * c.radius;
        else if constexpr (std::is_same_v<T, Cubic>) return c.p3;
        else return c.points.back();
      },
      curve);
}

Curve bend_curve(const Point2& a, const Point2& b, double bend_deg) {
  double len = distance(a, b);
  if (len == 0.0) {
    throw Error(ErrorKind::DegenerateEdge, "edge endpoints coincide; use a self-loop");
  }
  if (!(std::abs(bend_deg) < 180.0)) {
    throw Error(ErrorKind::InvalidOption, "bend must satisfy |bend| < 180");
  }
  if (bend_deg == 0.0) return Segment{a, b};

  double theta = deg_to_rad(bend_deg);
  double radius = len / (2.0 * std::sin(std::abs(theta)));
  Point2 direction = (b - a) * (1.0 / len);
  Point2 left_normal{-direction.y, direction.x};
  Point2 midpoint = (a + b) * 0.5;
  double sign = theta > 0.0 ? 1.0 : -1.0;
  Point2 center = midpoint + left_normal * (-sign * len / (2.0 * std::tan(std::abs(theta))));

  Arc arc;
  arc.center = center;
  arc.radius = radius;
  arc.start_angle = std::atan2(a.y - center.y, a.x - center.x);
  arc.sweep = -2.0 * theta;
  return arc;
}

Curve loop_curve(const Point2& center, double radius, double loopsize_cm,
                 double loopposition_deg, double loopshape_deg) {
  double lead = loopposition_deg + loopshape_deg / 2.0;
  double trail = loopposition_deg - loopshape_deg / 2.0;
  Cubic cubic;
  cubic.p0 = center + unit_at(lead) * radius;
  cubic.p1 = center + unit_at(lead) * (radius + loopsize_cm);
  cubic.p2 = center + unit_at(trail) * (radius + loopsize_cm);
  cubic.p3 = center + unit_at(trail) * radius;
  return cubic;
}

namespace {

Point2 cubic_point(const Cubic& c, double t) {
  double s = 1.0 - t;
  return c.p0 * (s * s * s) + c.p1 * (3.0 * s * s * t) + c.p2 * (3.0 * s * t * t) +
         c.p3 * (t * t * t);
}

Point2 cubic_deriv(const Cubic& c, double t) {
  double s = 1.0 - t;
  return (c.p1 - c.p0) * (3.0 * s * s) + (c.p2 - c.p1) * (6.0 * s * t) +
         (c.p3 - c.p2) * (3.0 * t * t);
}

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 8> kGaussNode = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeight = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

double cubic_arc_length(const Cubic& c, double t0, double t1) {
  double half = (t1 - t0) / 2.0;
  double mid = (t0 + t1) / 2.0;
  double sum = 0.0;
  for (int k = 0; k < 8; ++k) {
    sum += kGaussWeight[k] * cubic_deriv(c, mid + half * kGaussNode[k]).norm();
  }
  return sum * half;
}

constexpr int kCubicTableSize = 64;

// Cumulative arc length at t = i / kCubicTableSize.
std::array<double, kCubicTableSize + 1> cubic_length_table(const Cubic& c) {
  std::array<double, kCubicTableSize + 1> table{};
  for (int i = 1; i <= kCubicTableSize; ++i) {
    double t0 = static_cast<double>(i - 1) / kCubicTableSize;
    double t1 = static_cast<double>(i) / kCubicTableSize;
    table[i] = table[i - 1] + cubic_arc_length(c, t0, t1);
  }
  return table;
}

// Parameter at which the cubic has covered the given arc length.
double cubic_t_at_length(const Cubic& c, double target) {
  auto table = cubic_length_table(c);
  double total = table.back();
  if (total <= 0.0) return 0.0;
  target = std::clamp(target, 0.0, total);
  int i = 0;
  while (i < kCubicTableSize && table[i + 1] < target) ++i;
  double lo = static_cast<double>(i) / kCubicTableSize;
  double hi = static_cast<double>(i + 1) / kCubicTableSize;
  double base = table[i];
  for (int iter = 0; iter < 40; ++iter) {
    double mid = (lo + hi) / 2.0;
    if (base + cubic_arc_length(c, static_cast<double>(i) / kCubicTableSize, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

// De Casteljau subdivision to the sub-curve on [t0, t1].
Cubic cubic_slice(const Cubic& c, double t0, double t1) {
  auto split_right = [](const Cubic& q, double t) {
    Point2 p01 = q.p0 + (q.p1 - q.p0) * t;
    Point2 p12 = q.p1 + (q.p2 - q.p1) * t;
    Point2 p23 = q.p2 + (q.p3 - q.p2) * t;
    Point2 p012 = p01 + (p12 - p01) * t;
    Point2 p123 = p12 + (p23 - p12) * t;
    Point2 mid = p012 + (p123 - p012) * t;
    return Cubic{mid, p123, p23, q.p3};
  };
  auto split_left = [](const Cubic& q, double t) {
    Point2 p01 = q.p0 + (q.p1 - q.p0) * t;
    Point2 p12 = q.p1 + (q.p2 - q.p1) * t;
    Point2 p23 = q.p2 + (q.p3 - q.p2) * t;
    Point2 p012 = p01 + (p12 - p01) * t;
    Point2 p123 = p12 + (p23 - p12) * t;
    Point2 mid = p012 + (p123 - p012) * t;
    return Cubic{q.p0, p01, p012, mid};
  };
  Cubic right = split_right(c, t0);
  if (t1 >= 1.0) return right;
  double local = (t1 - t0) / (1.0 - t0);
  return split_left(right, local);
}

double polyline_length(const Polyline& p) {
  double total = 0.0;
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    total += distance(p.points[i - 1], p.points[i]);
  }
  return total;
}

// First parameter in [0,1] where the cubic leaves the circle of the given
// radius around `anchor`, assuming it starts inside. Bisection on the
// distance crossing found by marching.
std::optional<double> cubic_circle_exit(const Cubic& c, const Point2& anchor, double radius,
                                        bool from_start) {
  constexpr int kSteps = 256;
  auto dist = [&](double t) { return distance(cubic_point(c, t), anchor); };
  double prev = from_start ? 0.0 : 1.0;
  if (dist(prev) >= radius) return prev;
  for (int i = 1; i <= kSteps; ++i) {
    double t = from_start ? static_cast<double>(i) / kSteps
                          : 1.0 - static_cast<double>(i) / kSteps;
    if (dist(t) >= radius) {
      double lo = prev;
      double hi = t;
      for (int iter = 0; iter < 60; ++iter) {
        double mid = (lo + hi) / 2.0;
        if (dist(mid) < radius) lo = mid; else hi = mid;
      }
      return (lo + hi) / 2.0;
    }
    prev = t;
  }
  return std::nullopt;
}

std::optional<Curve> clip_segment(const Segment& s, double r_a, double r_b) {
  double len = distance(s.a, s.b);
  if (r_a + r_b >= len) return std::nullopt;
  Point2 direction = (s.b - s.a) * (1.0 / len);
  return Segment{s.a + direction * r_a, s.b - direction * r_b};
}

std::optional<Curve> clip_arc(const Arc& arc, double r_a, double r_b) {
  // A chord of length r subtends 2 asin(r / 2R) at the center.
  auto chord_angle = [&](double r) -> std::optional<double> {
    double x = r / (2.0 * arc.radius);
    if (x >= 1.0) return std::nullopt;
    return 2.0 * std::asin(x);
  };
  auto da = chord_angle(r_a);
  auto db = chord_angle(r_b);
  if (!da || !db) return std::nullopt;
  if (*da + *db >= std::abs(arc.sweep)) return std::nullopt;
  double sign = arc.sweep > 0.0 ? 1.0 : -1.0;
  Arc out = arc;
  out.start_angle = arc.start_angle + sign * *da;
  out.sweep = arc.sweep - sign * (*da + *db);
  return out;
}

std::optional<Curve> clip_cubic(const Cubic& c, double r_a, double r_b) {
  auto t_a = cubic_circle_exit(c, c.p0, r_a, true);
  auto t_b = cubic_circle_exit(c, c.p3, r_b, false);
  if (!t_a || !t_b || *t_a >= *t_b) return std::nullopt;
  return cubic_slice(c, *t_a, *t_b);
}

std::optional<Curve> clip_polyline(const Polyline& p, double r_a, double r_b) {
  if (p.points.size() < 2) return std::nullopt;
  const Point2 start = p.points.front();
  const Point2 end = p.points.back();

  // Walks forward until the distance to `anchor` crosses `radius`, returning
  // the segment index and the point on it.
  auto find_exit = [](const std::vector<Point2>& pts, const Point2& anchor,
                      double radius) -> std::optional<std::pair<std::size_t, Point2>> {
    if (radius <= 0.0) return std::make_pair(std::size_t{0}, pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (distance(pts[i], anchor) >= radius) {
        Point2 a = pts[i - 1];
        Point2 b = pts[i];
        double lo = 0.0, hi = 1.0;
        for (int iter = 0; iter < 60; ++iter) {
          double mid = (lo + hi) / 2.0;
          Point2 q = a + (b - a) * mid;
          if (distance(q, anchor) < radius) lo = mid; else hi = mid;
        }
        Point2 q = a + (b - a) * ((lo + hi) / 2.0);
        return std::make_pair(i - 1, q);
      }
    }
    return std::nullopt;
  };

  auto exit_a = find_exit(p.points, start, r_a);
  if (!exit_a) return std::nullopt;
  std::vector<Point2> reversed(p.points.rbegin(), p.points.rend());
  auto exit_b = find_exit(reversed, end, r_b);
  if (!exit_b) return std::nullopt;
  std::size_t last_seg = p.points.size() - 2 - exit_b->first;

  if (exit_a->first > last_seg) return std::nullopt;
  if (exit_a->first == last_seg) {
    // Both cuts land on one segment; keep them only in forward order.
    Point2 a = p.points[exit_a->first];
    Point2 b = p.points[exit_a->first + 1];
    Point2 d = b - a;
    double len2 = d.x * d.x + d.y * d.y;
    auto param = [&](const Point2& q) {
      return len2 > 0.0 ? ((q.x - a.x) * d.x + (q.y - a.y) * d.y) / len2 : 0.0;
    };
    if (param(exit_a->second) >= param(exit_b->second)) return std::nullopt;
  }

  Polyline out;
  out.points.push_back(exit_a->second);
  for (std::size_t i = exit_a->first + 1; i <= last_seg; ++i) out.points.push_back(p.points[i]);
  out.points.push_back(exit_b->second);
  return out;
}

}  // namespace

std::optional<Curve> clip_curve(const Curve& curve, double r_a, double r_b) {
  if (r_a < 0.0 || r_b < 0.0) {
    throw Error(ErrorKind::InvalidOption, "clip radii must be non-negative");
  }
  if (r_a == 0.0 && r_b == 0.0) return curve;
  return std::visit(
      [&](const auto& c) -> std::optional<Curve> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Segment>) return clip_segment(c, r_a, r_b);
        else if constexpr (std::is_same_v<T, Arc>) return clip_arc(c, r_a, r_b);
        else if constexpr (std::is_same_v<T, Cubic>) return clip_cubic(c, r_a, r_b);
        else return clip_polyline(c, r_a, r_b);
      },
      curve);
}

double curve_length(const Curve& curve) {
  return std::visit(
      [](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Segment>) return distance(c.a, c.b);
        else if constexpr (std::is_same_v<T, Arc>) return c.radius * std::abs(c.sweep);
        else if constexpr (std::is_same_v<T, Cubic>) return cubic_length_table(c).back();
        else return polyline_length(c);
      },
      curve);
}

PointTangent point_at_fraction(const Curve& curve, double t) {
  t = std::clamp(t, 0.0, 1.0);
  return std::visit(
      [&](const auto& c) -> PointTangent {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Segment>) {
          Point2 d = c.b - c.a;
          return {c.a + d * t, rad_to_deg(std::atan2(d.y, d.x))};
        } else if constexpr (std::is_same_v<T, Arc>) {
          double phi = c.start_angle + t * c.sweep;
          Point2 point = c.center + unit_at(rad_to_deg(phi)) * c.radius;
          double tangent = rad_to_deg(phi) + (c.sweep > 0.0 ? 90.0 : -90.0);
          return {point, tangent};
        } else if constexpr (std::is_same_v<T, Cubic>) {
          double total = curve_length(curve);
          double param = cubic_t_at_length(c, t * total);
          Point2 d = cubic_deriv(c, param);
          if (d.norm() == 0.0) d = cubic_point(c, std::min(param + 1e-6, 1.0)) - cubic_point(c, param);
          return {cubic_point(c, param), rad_to_deg(std::atan2(d.y, d.x))};
        } else {
          double target = t * polyline_length(c);
          double covered = 0.0;
          for (std::size_t i = 1; i < c.points.size(); ++i) {
            Point2 a = c.points[i - 1];
            Point2 b = c.points[i];
            double seg = distance(a, b);
            if (covered + seg >= target || i + 1 == c.points.size()) {
              double local = seg > 0.0 ? (target - covered) / seg : 0.0;
              local = std::clamp(local, 0.0, 1.0);
              Point2 d = b - a;
              return {a + d * local, rad_to_deg(std::atan2(d.y, d.x))};
            }
            covered += seg;
          }
          return {c.points.front(), 0.0};
        }
      },
      curve);
}

namespace {

std::string compass_token(double angle_deg) {
  double normalized = std::fmod(angle_deg, 360.0);
  if (normalized < 0.0) normalized += 360.0;
  int sector = static_cast<int>(std::lround(normalized / 45.0)) % 8;
  static const char* kTokens[8] = {"east", "north east", "north", "north west",
                                   "west", "south west", "south", "south east"};
  return kTokens[sector];
}

}  // namespace

LabelAnchor vertex_label_anchor(const Point2& center, double radius,
                                const LabelPosition& position, double distance_cm) {
  if (position.kind == LabelPosition::Kind::Center) {
    return {center, "center"};
  }
  double angle = 0.0;
  double extra = 0.0;
  if (position.kind == LabelPosition::Kind::Keyword) {
    auto known = label_keyword_angle(position.keyword);
    if (!known) {
      throw Error(ErrorKind::InvalidOption,
                  "unknown position keyword '" + position.keyword + "'");
    }
    angle = *known;
    if (position.offset) extra = position.offset->cm;
  } else {
    angle = position.angle_deg;
  }
  double reach = radius + distance_cm + extra;
  Point2 point = center + unit_at(angle) * reach;
  return {point, compass_token(angle + 180.0)};
}

PlaneGeometry plane_polygon(double x, double y, double width, double height, int layer,
                            std::optional<double> grid_spacing, const Basis& basis,
                            double layer_distance) {
  auto place = [&](double lx, double ly) {
    return project(basis, lx, ly, layer, layer_distance, 1.0);
  };
  PlaneGeometry out;
  out.corners = {place(x, y), place(x + width, y), place(x + width, y + height),
                 place(x, y + height)};
  if (grid_spacing && *grid_spacing > 0.0) {
    double g = *grid_spacing;
    for (int k = 1; k * g < width; ++k) {
      out.grid_lines.emplace_back(place(x + k * g, y), place(x + k * g, y + height));
    }
    for (int k = 1; k * g < height; ++k) {
      out.grid_lines.emplace_back(place(x, y + k * g), place(x + width, y + k * g));
    }
  }
  return out;
}

}  // namespace netfig
