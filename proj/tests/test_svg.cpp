#include <doctest.h>

#include <cmath>
#include <regex>
#include <string>
#include <vector>

#include "netfig/scene.hpp"
#include "netfig/svg_writer.hpp"

using namespace netfig;

namespace {

constexpr double kPxPerCm = 96.0 / 2.54;

VertexSpec vertex(std::string id, double x = 0, double y = 0) {
  VertexSpec v;
  v.id = std::move(id);
  v.x = Length::centimeters(x);
  v.y = Length::centimeters(y);
  return v;
}

std::string render(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                   std::vector<TextSpec> texts = {}, Settings settings = {}) {
  return render_svg(scene_build(
      build_network(std::move(vertices), std::move(edges), std::move(texts)), settings));
}

// Every <tag must close via /> or a matching </tag>, in stack order.
bool well_formed(const std::string& svg) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = svg.find('<', i)) != std::string::npos) {
    if (svg.compare(i, 2, "<?") == 0) {
      i = svg.find('>', i);
      continue;
    }
    std::size_t end = svg.find('>', i);
    if (end == std::string::npos) return false;
    std::string tag = svg.substr(i + 1, end - i - 1);
    if (!tag.empty() && tag.front() == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (!tag.empty() && tag.back() != '/') {
      stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
    i = end + 1;
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("a default vertex renders as a gray circle in pixel units") {
  std::string svg = render({vertex("A")}, {});
  CHECK(svg.find("<circle cx=\"0\" cy=\"0\" r=\"11.338583\" fill=\"#bfbfbf\" "
                 "stroke=\"#000000\" stroke-width=\"1.328352\"/>") != std::string::npos);
  CHECK(well_formed(svg));
}

TEST_CASE("the canvas flips y once and sizes from the bounds") {
  std::string svg = render({vertex("A")}, {});
  CHECK(svg.find("width=\"41.574803\" height=\"41.574803\" "
                 "viewBox=\"-20.787402 -20.787402 41.574803 41.574803\"") != std::string::npos);
  CHECK(svg.find("  <g transform=\"scale(1,-1)\">\n") != std::string::npos);
  // Exactly one flip group wraps all content.
  CHECK(svg.find("scale(1,-1)") == svg.rfind("scale(1,-1)"));
}

TEST_CASE("edges stroke without fill and direct edges add a solid head") {
  EdgeSpec e;
  e.u = "A";
  e.v = "B";
  e.direct = true;
  std::string svg = render({vertex("A"), vertex("B", 2)}, {e});
  CHECK(svg.find("fill=\"none\" stroke=\"#404040\" stroke-width=\"1.992528\"") !=
        std::string::npos);
  std::size_t head = svg.find(" Z\" fill=\"#404040\" stroke=\"none\"/>");
  CHECK(head != std::string::npos);
}

TEST_CASE("a bent edge emits an arc that parses back to the same circle") {
  EdgeSpec e;
  e.u = "A";
  e.v = "B";
  e.bend = 45;
  std::string svg = render({vertex("A"), vertex("B", 2)}, {e});

  std::regex arc_re(
      R"(M (-?[0-9.]+) (-?[0-9.]+) A (-?[0-9.]+) (-?[0-9.]+) 0 ([01]) ([01]) (-?[0-9.]+) (-?[0-9.]+))");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, arc_re));
  Point2 from{std::stod(m[1]) / kPxPerCm, std::stod(m[2]) / kPxPerCm};
  Point2 to{std::stod(m[7]) / kPxPerCm, std::stod(m[8]) / kPxPerCm};
  double radius = std::stod(m[3]) / kPxPerCm;

  // Bend 45 over a chord of 2 puts the center at (1,-1) with radius sqrt 2.
  CHECK(radius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(m[3].str() == m[4].str());
  CHECK(m[5].str() == "0");
  CHECK(m[6].str() == "0");
  Point2 center{1, -1};
  CHECK(distance(from, center) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(distance(to, center) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(distance(from, Point2{0, 0}) == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(distance(to, Point2{2, 0}) == doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("wide sweeps set the large arc flag") {
  EdgeSpec e;
  e.u = "A";
  e.v = "B";
  e.bend = -110;
  std::string svg = render({vertex("A"), vertex("B", 2)}, {e});
  std::regex arc_re(R"(A (-?[0-9.]+) (-?[0-9.]+) 0 ([01]) ([01]))");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, arc_re));
  CHECK(m[3].str() == "1");
  CHECK(m[4].str() == "1");
}

TEST_CASE("texts counter the flip and rotate opposite the model angle") {
  TextSpec t;
  t.content = "note";
  t.x = Length::centimeters(1);
  t.y = Length::centimeters(2);
  t.rotation = 30;
  std::string svg = render({}, {}, {t});
  CHECK(svg.find("<text transform=\"translate(37.795276,75.590551) scale(1,-1) rotate(-30)\" "
                 "font-size=\"13.28352\" fill=\"#000000\" text-anchor=\"middle\" "
                 "dominant-baseline=\"central\">note</text>") != std::string::npos);
}

TEST_CASE("vertex labels use the small font and compass alignment") {
  auto v = vertex("A");
  v.label = "hub";
  v.position = LabelPosition::at_keyword("above");
  std::string svg = render({v}, {});
  std::size_t at = svg.find("font-size=\"9.298464\"");
  REQUIRE(at != std::string::npos);
  std::string tail = svg.substr(at, svg.find('\n', at) - at);
  CHECK(tail.find("text-anchor=\"middle\"") != std::string::npos);
  // Anchor south: baseline attribute stays unset so the box sits above.
  CHECK(tail.find("dominant-baseline") == std::string::npos);
  CHECK(tail.find(">hub</text>") != std::string::npos);
}

TEST_CASE("edge labels get a white backing rectangle") {
  EdgeSpec e;
  e.u = "A";
  e.v = "B";
  e.label = "w";
  std::string svg = render({vertex("A"), vertex("B", 2)}, {e});
  std::regex rect_re(
      R"re(<rect x="(-?[0-9.]+)" y="(-?[0-9.]+)" width="([0-9.]+)" height="([0-9.]+)" fill="#ffffff"/>)re");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, rect_re));
  // One 9.3px character: the box straddles the midpoint (1,0) cm.
  double x = std::stod(m[1]) + std::stod(m[3]) / 2.0;
  double y = std::stod(m[2]) + std::stod(m[4]) / 2.0;
  CHECK(x / kPxPerCm == doctest::Approx(1.0));
  CHECK(y / kPxPerCm == doctest::Approx(0.0));
}

TEST_CASE("math labels render italic") {
  auto v = vertex("A");
  v.label = "$x$";
  std::string svg = render({v}, {});
  CHECK(svg.find("font-style=\"italic\"") != std::string::npos);
  CHECK(svg.find(">x</text>") != std::string::npos);
}

TEST_CASE("reserved characters are escaped") {
  TextSpec t;
  t.content = "a<b & \"c\"";
  std::string svg = render({}, {}, {t});
  CHECK(svg.find(">a&lt;b &amp; &quot;c&quot;</text>") != std::string::npos);
  CHECK(well_formed(svg));
}

TEST_CASE("wrapped text splits into tspans") {
  TextSpec t;
  t.content = "one two three four five six";
  t.width = Length::centimeters(2);
  std::string svg = render({}, {}, {t});
  CHECK(svg.find("<tspan x=\"0\" dy=\"0\">") != std::string::npos);
  CHECK(svg.find("<tspan x=\"0\" dy=\"1.2em\">") != std::string::npos);
  CHECK(well_formed(svg));
}

TEST_CASE("shapes map to native svg elements") {
  auto r = vertex("R");
  r.shape = "rectangle";
  auto d = vertex("D", 2);
  d.shape = "diamond";
  std::string svg = render({r, d}, {});
  CHECK(svg.find("<rect x=\"-11.338583\" y=\"-11.338583\" width=\"22.677165\" "
                 "height=\"22.677165\"") != std::string::npos);
  CHECK(svg.find("<path d=\"M 75.590551 11.338583 L 86.929134 0 L 75.590551 -11.338583 "
                 "L 64.251969 0 Z\"") != std::string::npos);
}

TEST_CASE("opacity attributes appear only when needed") {
  auto v = vertex("A");
  v.opacity = 0.5;
  auto w = vertex("B", 2);
  std::string svg = render({v, w}, {});
  CHECK(svg.find("fill=\"#bfbfbf\" fill-opacity=\"0.5\"") != std::string::npos);
  // The second vertex keeps the default and prints no opacity.
  std::size_t second = svg.rfind("<circle");
  CHECK(svg.find("fill-opacity", second) == std::string::npos);
}

TEST_CASE("scene warnings do not leak into the markup") {
  auto v = vertex("A");
  v.style = "dashed";
  Scene scene = scene_build(build_network({v}, {}), Settings{});
  REQUIRE(!scene.warnings.empty());
  std::string svg = render_svg(scene);
  CHECK(svg.find("dashed") == std::string::npos);
  CHECK(svg.find("TeX-only") == std::string::npos);
}

TEST_CASE("whole document skeleton") {
  std::string svg = render({vertex("A")}, {});
  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  CHECK(svg.substr(svg.size() - 14) == "  </g>\n</svg>\n");
}
