#include <doctest.h>

#include "netfig/errors.hpp"
#include "netfig/network.hpp"

using namespace netfig;

namespace {

VertexSpec vertex(std::string id, double x = 0, double y = 0) {
  VertexSpec v;
  v.id = std::move(id);
  v.x = Length::centimeters(x);
  v.y = Length::centimeters(y);
  return v;
}

EdgeSpec edge(std::string u, std::string v) {
  EdgeSpec e;
  e.u = std::move(u);
  e.v = std::move(v);
  return e;
}

ErrorKind kind_of(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("a valid network passes and keeps order") {
  Network n = build_network({vertex("A"), vertex("B", 1)}, {edge("A", "B")});
  REQUIRE(n.vertices.size() == 2);
  REQUIRE(n.edges.size() == 1);
  CHECK(n.find_vertex("A") == &n.vertices[0]);
  CHECK(n.find_vertex("B") == &n.vertices[1]);
  CHECK(n.find_vertex("Z") == nullptr);
}

TEST_CASE("vertex ids must be unique and well formed") {
  CHECK(kind_of([] {
          build_network({vertex("A"), vertex("A")}, {});
        }) == ErrorKind::DuplicateVertexId);
  CHECK(kind_of([] { build_network({vertex("")}, {}); }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] { build_network({vertex("a b")}, {}); }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] { build_network({vertex("a$b")}, {}); }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] { build_network({vertex("a\\b")}, {}); }) == ErrorKind::InvalidOption);
}

TEST_CASE("edges must reference known vertices") {
  CHECK(kind_of([] {
          build_network({vertex("A")}, {edge("A", "Z")});
        }) == ErrorKind::UnknownEndpoint);
  CHECK(kind_of([] {
          build_network({vertex("A")}, {edge("Z", "A")});
        }) == ErrorKind::UnknownEndpoint);
}

TEST_CASE("option ranges are validated") {
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.opacity = 1.2;
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.size = Length::centimeters(-1);
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.fontscale = 0;
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.layer = 0;
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.distance = Length::centimeters(-0.5);
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
}

TEST_CASE("label positions are checked") {
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.position = LabelPosition::at_keyword("sideways");
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.position = LabelPosition::at_angle(400);
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
  auto ok = vertex("A");
  ok.position = LabelPosition::at_keyword("below right", Length::centimeters(0.1));
  CHECK_NOTHROW(build_network({ok}, {}));
}

TEST_CASE("font colors cannot be channel triples") {
  CHECK(kind_of([] {
          auto v = vertex("A");
          v.fontcolor = parse_color("{1,2,3}");
          build_network({v}, {});
        }) == ErrorKind::InvalidOption);
}

TEST_CASE("edge options are validated") {
  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.bend = 180;
          build_network({vertex("A"), vertex("B", 1)}, {e});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.distance = 1.5;
          build_network({vertex("A"), vertex("B", 1)}, {e});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.lw = Length::points(0);
          build_network({vertex("A"), vertex("B", 1)}, {e});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto e = edge("A", "A");
          e.loopshape = 360;
          build_network({vertex("A")}, {e});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto e = edge("A", "A");
          e.loopposition = 400;
          build_network({vertex("A")}, {e});
        }) == ErrorKind::InvalidOption);
}

TEST_CASE("path edges take waypoints but no bend or label") {
  auto base = [] {
    return std::vector<VertexSpec>{vertex("A"), vertex("B", 2), vertex("C", 1, 1)};
  };
  auto e = edge("A", "B");
  e.path = {Waypoint::vertex("A"), Waypoint::point(Length::centimeters(1), Length::centimeters(2)),
            Waypoint::vertex("B")};
  CHECK_NOTHROW(build_network(base(), {e}));

  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.path = {Waypoint::vertex("A"), Waypoint::vertex("Z")};
          build_network({vertex("A"), vertex("B", 2)}, {e});
        }) == ErrorKind::UnknownPathRef);
  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.path = {Waypoint::vertex("A"), Waypoint::vertex("B")};
          e.bend = 20;
          build_network({vertex("A"), vertex("B", 2)}, {e});
        }) == ErrorKind::InvalidOption);
  CHECK(kind_of([] {
          auto e = edge("A", "B");
          e.path = {Waypoint::vertex("A"), Waypoint::vertex("B")};
          e.label = "no";
          build_network({vertex("A"), vertex("B", 2)}, {e});
        }) == ErrorKind::InvalidOption);
}

TEST_CASE("texts and planes are validated") {
  TextSpec t;
  t.content = "hello";
  t.opacity = 2.0;
  CHECK_THROWS_AS(build_network({}, {}, {t}), Error);

  PlaneSpec p;
  p.width = Length::centimeters(-1);
  CHECK_THROWS_AS(build_network({}, {}, {}, {p}), Error);

  PlaneSpec grid;
  grid.grid = Length::centimeters(0);
  CHECK_THROWS_AS(build_network({}, {}, {}, {grid}), Error);

  PlaneSpec ok;
  ok.grid = Length::centimeters(0.5);
  ok.layer = 2;
  CHECK_NOTHROW(build_network({}, {}, {}, {ok}));
}
