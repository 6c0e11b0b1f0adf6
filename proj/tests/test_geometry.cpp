#include <doctest.h>

#include <cmath>
#include <random>

#include "netfig/errors.hpp"
#include "netfig/geometry.hpp"

using namespace netfig;

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

Point2 reflect_across(const Point2& p, const Point2& a, const Point2& b) {
  Point2 d = b - a;
  double len2 = d.x * d.x + d.y * d.y;
  Point2 r = p - a;
  double along = (r.x * d.x + r.y * d.y) / len2;
  Point2 foot = a + d * along;
  return foot + (foot - p);
}

}  // namespace

TEST_CASE("unit vectors are exact on the axes") {
  CHECK(unit_at(0) == Point2{1, 0});
  CHECK(unit_at(90) == Point2{0, 1});
  CHECK(unit_at(180) == Point2{-1, 0});
  CHECK(unit_at(270) == Point2{0, -1});
  CHECK(unit_at(360) == Point2{1, 0});
  CHECK(unit_at(-90) == Point2{0, -1});
  CHECK(unit_at(450) == Point2{0, 1});
  CHECK(unit_at(45).x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("default projection is the identity on the plane") {
  Basis basis = projection_basis(Coordinates{});
  CHECK(basis.ex == Point2{1, 0});
  CHECK(basis.ey == Point2{0, 1});
  CHECK(basis.ez == Point2{0, 1});
  CHECK(project(basis, 1.25, -2.5, 1, -2.0, 1.0) == Point2{1.25, -2.5});
  CHECK(project(basis, 1.25, -2.5, 1, 0.0, 1.0) == Point2{1.25, -2.5});
}

TEST_CASE("layer offsets move along the z axis") {
  Basis basis = projection_basis(Coordinates{});
  CHECK(project(basis, 1.0, 0.5, 2, -1.5, 1.0) == Point2{1.0, -1.0});
  CHECK(project(basis, 0.0, 0.0, 3, -1.5, 1.0) == Point2{0.0, -3.0});
  CHECK(project(basis, 2.0, 1.0, 1, -1.5, 2.0) == Point2{4.0, 2.0});
}

TEST_CASE("skewed bases combine linearly") {
  Coordinates c;
  c.x_angle = -15;
  c.y_angle = 15;
  c.z_angle = 90;
  c.x_length = 0.9;
  c.z_length = 0.5;
  Basis basis = projection_basis(c);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    double x1 = coord(rng), y1 = coord(rng), x2 = coord(rng), y2 = coord(rng);
    Point2 sum = project(basis, x1 + x2, y1 + y2, 1, 0.0, 1.0);
    Point2 parts = project(basis, x1, y1, 1, 0.0, 1.0) + project(basis, x2, y2, 1, 0.0, 1.0);
    CHECK(sum.x == doctest::Approx(parts.x).epsilon(1e-12));
    CHECK(sum.y == doctest::Approx(parts.y).epsilon(1e-12));
  }
}

TEST_CASE("a 45 degree bend gives the expected arc") {
  Curve curve = bend_curve({0, 0}, {2, 0}, 45);
  REQUIRE(std::holds_alternative<Arc>(curve));
  const Arc& arc = std::get<Arc>(curve);
  CHECK(arc.center.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(arc.center.y == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(arc.radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(arc.sweep == doctest::Approx(-kTau / 4).epsilon(1e-12));

  Point2 start = curve_start(curve);
  Point2 end = curve_end(curve);
  CHECK(start.x == doctest::Approx(0.0));
  CHECK(start.y == doctest::Approx(0.0));
  CHECK(end.x == doctest::Approx(2.0));
  CHECK(end.y == doctest::Approx(0.0));

  Point2 apex = point_at_fraction(curve, 0.5).point;
  CHECK(apex.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(apex.y == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("bend sign selects the side") {
  Point2 up = point_at_fraction(bend_curve({0, 0}, {2, 0}, 45), 0.5).point;
  Point2 down = point_at_fraction(bend_curve({0, 0}, {2, 0}, -45), 0.5).point;
  CHECK(up.y > 0.0);
  CHECK(down.y < 0.0);
  CHECK(down.y == doctest::Approx(-up.y).epsilon(1e-12));
}

TEST_CASE("zero bend degenerates to a segment") {
  Curve curve = bend_curve({0, 1}, {3, 2}, 0);
  REQUIRE(std::holds_alternative<Segment>(curve));
  CHECK(curve_length(curve) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("bend rejects coincident endpoints and straight angles") {
  CHECK_THROWS_AS(bend_curve({1, 1}, {1, 1}, 30), Error);
  CHECK_THROWS_AS(bend_curve({0, 0}, {1, 0}, 180), Error);
  CHECK_THROWS_AS(bend_curve({0, 0}, {1, 0}, -180), Error);
  try {
    bend_curve({1, 1}, {1, 1}, 30);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateEdge);
  }
}

TEST_CASE("opposite bends mirror across the chord") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  std::uniform_real_distribution<double> angle(1.0, 179.0);
  for (int trial = 0; trial < 300; ++trial) {
    Point2 a{coord(rng), coord(rng)};
    Point2 b{coord(rng), coord(rng)};
    if (distance(a, b) < 1e-3) continue;
    double theta = angle(rng);
    Curve left = bend_curve(a, b, theta);
    Curve right = bend_curve(a, b, -theta);
    for (int k = 0; k <= 64; ++k) {
      double t = static_cast<double>(k) / 64.0;
      Point2 p = point_at_fraction(left, t).point;
      Point2 q = reflect_across(point_at_fraction(right, t).point, a, b);
      CHECK(p.x == doctest::Approx(q.x).epsilon(1e-9));
      CHECK(p.y == doctest::Approx(q.y).epsilon(1e-9));
    }
  }
}

TEST_CASE("self-loop control points") {
  Point2 center{1, 2};
  double radius = 0.3;
  Curve curve = loop_curve(center, radius, 1.0, 45, 90);
  REQUIRE(std::holds_alternative<Cubic>(curve));
  const Cubic& c = std::get<Cubic>(curve);
  CHECK(c.p0.x == doctest::Approx(center.x + radius * std::cos(kTau / 4)).epsilon(1e-12));
  CHECK(c.p0.y == doctest::Approx(center.y + radius).epsilon(1e-12));
  CHECK(c.p1.y == doctest::Approx(center.y + 1.3).epsilon(1e-12));
  CHECK(c.p2.x == doctest::Approx(center.x + 1.3).epsilon(1e-12));
  CHECK(c.p3.x == doctest::Approx(center.x + radius).epsilon(1e-12));
  CHECK(c.p3.y == doctest::Approx(center.y).epsilon(1e-12));
  CHECK(distance(curve_start(curve), center) == doctest::Approx(radius));
  CHECK(distance(curve_end(curve), center) == doctest::Approx(radius));
}

TEST_CASE("clipping a segment trims exact radii") {
  Segment s{{0, 0}, {4, 0}};
  auto clipped = clip_curve(s, 0.5, 1.0);
  REQUIRE(clipped.has_value());
  CHECK(curve_start(*clipped) == Point2{0.5, 0});
  CHECK(curve_end(*clipped) == Point2{3.0, 0});
  CHECK(!clip_curve(s, 2.0, 2.0).has_value());
  CHECK(!clip_curve(s, 5.0, 0.0).has_value());
}

TEST_CASE("clipping leaves endpoints on the vertex circles") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(-170.0, 170.0);
  std::uniform_real_distribution<double> rad(0.05, 0.4);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Point2 a{coord(rng), coord(rng)};
    Point2 b{coord(rng), coord(rng)};
    double theta = angle(rng);
    if (distance(a, b) < 1.2 || std::abs(theta) < 1.0) continue;
    double r_a = rad(rng);
    double r_b = rad(rng);
    auto clipped = clip_curve(bend_curve(a, b, theta), r_a, r_b);
    if (!clipped) continue;
    ++tested;
    CHECK(distance(curve_start(*clipped), a) == doctest::Approx(r_a).epsilon(1e-9));
    CHECK(distance(curve_end(*clipped), b) == doctest::Approx(r_b).epsilon(1e-9));
  }
  CHECK(tested > 100);
}

TEST_CASE("clipping a cubic lands on the circles") {
  Cubic c{{0, 0}, {1, 2}, {3, 2}, {4, 0}};
  auto clipped = clip_curve(Curve{c}, 0.5, 0.75);
  REQUIRE(clipped.has_value());
  CHECK(distance(curve_start(*clipped), c.p0) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(distance(curve_end(*clipped), c.p3) == doctest::Approx(0.75).epsilon(1e-6));
  CHECK(!clip_curve(Curve{c}, 10.0, 0.0).has_value());
}

TEST_CASE("clipping a polyline walks the corners") {
  Polyline p{{{0, 0}, {2, 0}, {2, 2}}};
  auto clipped = clip_curve(Curve{p}, 0.5, 0.5);
  REQUIRE(clipped.has_value());
  const Polyline& out = std::get<Polyline>(*clipped);
  REQUIRE(out.points.size() == 3);
  CHECK(out.points[0].x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(out.points[1] == Point2{2, 0});
  CHECK(out.points[2].y == doctest::Approx(1.5).epsilon(1e-9));

  CHECK(!clip_curve(Curve{Polyline{{{0, 0}, {1, 0}}}}, 0.6, 0.6).has_value());
}

TEST_CASE("zero clip radii return the curve unchanged") {
  Curve arc = bend_curve({0, 0}, {2, 0}, 30);
  auto same = clip_curve(arc, 0.0, 0.0);
  REQUIRE(same.has_value());
  CHECK(curve_start(*same) == curve_start(arc));
  CHECK(curve_end(*same) == curve_end(arc));
  CHECK_THROWS_AS(clip_curve(arc, -0.1, 0.0), Error);
}

TEST_CASE("curve lengths") {
  CHECK(curve_length(Segment{{0, 0}, {3, 4}}) == doctest::Approx(5.0));
  Arc arc{{0, 0}, 2.0, 0.0, kTau / 4};
  CHECK(curve_length(arc) == doctest::Approx(kTau / 2).epsilon(1e-12));
  // A cubic tracing a straight line has the segment's length.
  Cubic line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  CHECK(curve_length(Curve{line}) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(curve_length(Polyline{{{0, 0}, {1, 0}, {1, 1}}}) == doctest::Approx(2.0));
}

TEST_CASE("point_at_fraction parameterizes by arc length") {
  SUBCASE("segment") {
    PointTangent pt = point_at_fraction(Segment{{0, 0}, {4, 0}}, 0.25);
    CHECK(pt.point == Point2{1, 0});
    CHECK(pt.tangent_deg == doctest::Approx(0.0));
  }
  SUBCASE("arc midpoint and tangent") {
    Arc arc{{0, 0}, 1.0, 0.0, kTau / 4};
    PointTangent pt = point_at_fraction(arc, 0.5);
    CHECK(pt.point.x == doctest::Approx(std::cos(kTau / 8)).epsilon(1e-12));
    CHECK(pt.point.y == doctest::Approx(std::sin(kTau / 8)).epsilon(1e-12));
    CHECK(pt.tangent_deg == doctest::Approx(135.0).epsilon(1e-12));
    Arc cw{{0, 0}, 1.0, kTau / 4, -kTau / 4};
    CHECK(point_at_fraction(cw, 0.0).tangent_deg == doctest::Approx(0.0));
  }
  SUBCASE("cubic fractions cover proportional arc length") {
    Cubic c{{0, 0}, {0.5, 1.5}, {2.5, 1.5}, {3, 0}};
    double total = curve_length(Curve{c});
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      Point2 p = point_at_fraction(Curve{c}, t).point;
      // Walk the curve densely up to the returned point to measure length.
      double walked = 0.0;
      Point2 prev{0, 0};
      bool reached = false;
      for (int i = 1; i <= 20000 && !reached; ++i) {
        double u = static_cast<double>(i) / 20000.0;
        double s = 1.0 - u;
        Point2 q = c.p0 * (s * s * s) + c.p1 * (3 * s * s * u) + c.p2 * (3 * s * u * u) +
                   c.p3 * (u * u * u);
        walked += distance(prev, q);
        if (distance(q, p) < 2e-4) reached = true;
        prev = q;
      }
      REQUIRE(reached);
      CHECK(walked == doctest::Approx(t * total).epsilon(2e-3));
    }
  }
  SUBCASE("polyline") {
    Polyline p{{{0, 0}, {2, 0}, {2, 2}}};
    CHECK(point_at_fraction(p, 0.5).point == Point2{2, 0});
    CHECK(point_at_fraction(p, 0.75).point.y == doctest::Approx(1.0));
    CHECK(point_at_fraction(p, 0.75).tangent_deg == doctest::Approx(90.0));
  }
}

TEST_CASE("label anchors around a vertex") {
  Point2 center{2, 0};
  SUBCASE("center") {
    LabelAnchor la = vertex_label_anchor(center, 0.25, LabelPosition::center(), 0.15);
    CHECK(la.point == center);
    CHECK(la.anchor == "center");
  }
  SUBCASE("free angle quantizes the anchor to a compass point") {
    LabelAnchor la = vertex_label_anchor(center, 0.25, LabelPosition::at_angle(30), 0.15);
    CHECK(la.point.x == doctest::Approx(2.0 + 0.4 * std::cos(kTau / 12)).epsilon(1e-12));
    CHECK(la.point.x == doctest::Approx(2.34641).epsilon(1e-5));
    CHECK(la.point.y == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(la.anchor == "south west");
  }
  SUBCASE("keywords map to their angles") {
    LabelAnchor below = vertex_label_anchor(center, 0.25, LabelPosition::at_keyword("below"), 0.25);
    CHECK(below.point.x == doctest::Approx(2.0));
    CHECK(below.point.y == doctest::Approx(-0.5));
    CHECK(below.anchor == "north");

    LabelAnchor above = vertex_label_anchor(center, 0.25, LabelPosition::at_keyword("above"), 0.25);
    CHECK(above.point.y == doctest::Approx(0.5));
    CHECK(above.anchor == "south");

    LabelAnchor corner = vertex_label_anchor(
        center, 0.25, LabelPosition::at_keyword("above right", Length::centimeters(0.1)), 0.15);
    CHECK(corner.anchor == "south west");
    CHECK(distance(corner.point, center) == doctest::Approx(0.5));
  }
  SUBCASE("the eight keywords") {
    CHECK(*label_keyword_angle("right") == 0.0);
    CHECK(*label_keyword_angle("above right") == 45.0);
    CHECK(*label_keyword_angle("above") == 90.0);
    CHECK(*label_keyword_angle("above left") == 135.0);
    CHECK(*label_keyword_angle("left") == 180.0);
    CHECK(*label_keyword_angle("below left") == 225.0);
    CHECK(*label_keyword_angle("below") == 270.0);
    CHECK(*label_keyword_angle("below right") == 315.0);
    CHECK(!label_keyword_angle("sideways").has_value());
  }
}

TEST_CASE("plane polygons and interior grids") {
  Basis basis = projection_basis(Coordinates{});
  PlaneGeometry plane = plane_polygon(0.5, -1.0, 3.0, 2.5, 1, 0.5, basis, 0.0);
  CHECK(plane.corners[0] == Point2{0.5, -1.0});
  CHECK(plane.corners[1] == Point2{3.5, -1.0});
  CHECK(plane.corners[2] == Point2{3.5, 1.5});
  CHECK(plane.corners[3] == Point2{0.5, 1.5});
  int vertical = 0, horizontal = 0;
  for (const auto& [from, to] : plane.grid_lines) {
    if (from.x == to.x) ++vertical;
    if (from.y == to.y) ++horizontal;
  }
  CHECK(vertical == 5);
  CHECK(horizontal == 4);
  CHECK(plane.grid_lines.size() == 9);

  PlaneGeometry bare = plane_polygon(0, 0, 1, 1, 1, std::nullopt, basis, 0.0);
  CHECK(bare.grid_lines.empty());

  // A spacing that divides the width exactly excludes the border line.
  PlaneGeometry tight = plane_polygon(0, 0, 1, 1, 1, 0.5, basis, 0.0);
  CHECK(tight.grid_lines.size() == 2);

  PlaneGeometry offset = plane_polygon(0, 0, 2, 2, 3, 1.0, basis, -1.5);
  CHECK(offset.corners[0] == Point2{0, -3.0});
}
