#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netfig/cli.hpp"

using namespace netfig;
namespace fs = std::filesystem;

namespace {

std::string data_path(const std::string& name) {
  return std::string(TESTS_DATA_DIR) + "/" + name;
}

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_file(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "netfig_cli_tests";
  fs::create_directories(dir);
  fs::path path = dir / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("no arguments prints usage and fails") {
  CliResult r = run({});
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("netfig") != std::string::npos);
  CHECK(r.err.find("--vertices") != std::string::npos);
}

TEST_CASE("help goes to stdout and succeeds") {
  CliResult r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("--format") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("unknown flags fail with usage exit code") {
  CliResult r = run({"--bogus"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("bad format values are rejected at parse time") {
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--format", "png"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("csv tables render to tex on stdout") {
  CliResult r = run({"--vertices", data_path("vertices.csv"),
                     "--edges", data_path("edges.csv")});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\\begin{tikzpicture}\n") != std::string::npos);
  CHECK(r.out.find("\\Vertex[x=0,y=0,size=0.4,color=green,opacity=0.9,label=a]{A}\n") !=
        std::string::npos);
  CHECK(r.out.find("\\Vertex[x=2,y=1,size=0.8,color=orange,opacity=0.3,label=c,NoLabel]{C}\n") !=
        std::string::npos);
  CHECK(r.out.find("\\Edge[lw=0.5pt,color={0,120,255},opacity=1,bend=30,label=ab,RGB](A)(B)\n") !=
        std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("svg format renders markup") {
  CliResult r = run({"--vertices", data_path("vertices.csv"),
                     "--edges", data_path("edges.csv"), "--format", "svg"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(r.out.find("<circle") != std::string::npos);
}

TEST_CASE("standalone wraps the picture in a document") {
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--standalone"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("\\documentclass{standalone}\n", 0) == 0);
  CHECK(r.out.find("\\end{document}\n") != std::string::npos);
}

TEST_CASE("output lands in the named file instead of stdout") {
  fs::path target = fs::temp_directory_path() / "netfig_cli_tests" / "out.tex";
  fs::create_directories(target.parent_path());
  fs::remove(target);
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--output", target.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\\begin{tikzpicture}") != std::string::npos);
}

TEST_CASE("unwritable output paths report an io error") {
  CliResult r = run({"--vertices", data_path("vertices.csv"),
                     "--output", "/nonexistent_dir/out.tex"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("/nonexistent_dir/out.tex") != std::string::npos);
}

TEST_CASE("missing input files name the file") {
  CliResult r = run({"--vertices", "/no/such/table.csv"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("/no/such/table.csv") != std::string::npos);
}

TEST_CASE("malformed cells report file, line and column") {
  fs::path bad = scratch_file("bad_vertices.csv", "id,x\nA,wide\n");
  CliResult r = run({"--vertices", bad.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.err.find("column 'x'") != std::string::npos);
}

TEST_CASE("unknown csv columns only warn") {
  fs::path odd = scratch_file("odd_vertices.csv", "id,wobble\nA,3\n");
  CliResult r = run({"--vertices", odd.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.err.find("wobble") != std::string::npos);
  CHECK(r.out.find("\\Vertex{A}") != std::string::npos);
}

TEST_CASE("settings files feed the preamble") {
  fs::path conf = scratch_file("style.conf",
                               "# figure defaults\n"
                               "DefaultUnit = mm\n"
                               "VertexStyle.MinSize = 9\n");
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--settings", conf.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\\SetDefaultUnit{mm}\n") != std::string::npos);
  CHECK(r.out.find("\\SetVertexStyle[MinSize=9]\n") != std::string::npos);
  // Cell values read in the active unit, so the table round trips unchanged.
  CHECK(r.out.find("\\Vertex[x=0,y=0,size=0.4,color=green,opacity=0.9,label=a]{A}\n") !=
        std::string::npos);
}

TEST_CASE("settings file errors carry the line number") {
  fs::path conf = scratch_file("broken.conf", "DistanceScale = 2\nWobble = 3\n");
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--settings", conf.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("set flags override the settings file") {
  fs::path conf = scratch_file("scale.conf", "DistanceScale = 2\n");
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--settings", conf.string(),
                     "--set", "DistanceScale=3"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\\SetDistanceScale{3}\n") != std::string::npos);
}

TEST_CASE("set flags require key=value") {
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--set", "DistanceScale"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("key=value") != std::string::npos);
}

TEST_CASE("invalid setting values fail with context") {
  CliResult r = run({"--vertices", data_path("vertices.csv"), "--set", "DistanceScale=0"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("modes tag the picture environment") {
  CliResult r = run({"--vertices", data_path("ml_vertices.csv"), "--mode", "multilayer3d"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\\begin{tikzpicture}[multilayer=3d]\n") != std::string::npos);

  CliResult r2 = run({"--vertices", data_path("ml_vertices.csv"), "--mode", "multilayer"});
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out.find("\\begin{tikzpicture}[multilayer]\n") != std::string::npos);
}

TEST_CASE("layer filter keeps other vertices only as anchors") {
  CliResult r = run({"--vertices", data_path("ml_vertices.csv"),
                     "--edges", data_path("ml_edges.csv"), "--layer", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find(",layer=1,Pseudo]{A}") != std::string::npos);
  CHECK(r.out.find(",layer=2]{D}") != std::string::npos);
  CHECK(r.out.find(",layer=2,Pseudo]") == std::string::npos);
  // Edges survive the filter; their cross-layer endpoints turn pseudo.
  CHECK(r.out.find("(D)(F)") != std::string::npos);
  CHECK(r.out.find("(A)(B)") != std::string::npos);
}

TEST_CASE("edge layer filter keeps only the named layer pairs") {
  CliResult r = run({"--vertices", data_path("ml_vertices.csv"),
                     "--edges", data_path("ml_edges.csv"), "--edge-layer", "1,2"});
  REQUIRE(r.exit_code == 0);
  CHECK(count(r.out, "\\Edge") == 3);
  CHECK(r.out.find("(C)(G)") != std::string::npos);
  CHECK(r.out.find("(E)(H)") != std::string::npos);
  CHECK(r.out.find("(F)(A)") != std::string::npos);
  CHECK(r.out.find("(A)(B)") == std::string::npos);

  CliResult r2 = run({"--vertices", data_path("ml_vertices.csv"),
                      "--edges", data_path("ml_edges.csv"),
                      "--edge-layer", "1,2", "--edge-layer", "2,2"});
  REQUIRE(r2.exit_code == 0);
  CHECK(count(r2.out, "\\Edge") == 6);
}

TEST_CASE("edge layer flags validate their shape") {
  CliResult r = run({"--vertices", data_path("ml_vertices.csv"),
                     "--edges", data_path("ml_edges.csv"), "--edge-layer", "12"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("--edge-layer") != std::string::npos);
}

TEST_CASE("edge files can bind their own undrawn vertex table") {
  CliResult r = run({"--edges", data_path("edges.csv") + "@" + data_path("vertices.csv")});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find(",Pseudo]{A}") != std::string::npos);
  CHECK(r.out.find("(A)(B)") != std::string::npos);

  // Drawing the same table disables the pseudo binding.
  CliResult r2 = run({"--vertices", data_path("vertices.csv"),
                      "--edges", data_path("edges.csv") + "@" + data_path("vertices.csv")});
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out.find("Pseudo") == std::string::npos);
}

TEST_CASE("edges against a partial pool fail cleanly") {
  fs::path partial = scratch_file("partial_vertices.csv", "id\nA\nB\n");
  CliResult r = run({"--vertices", partial.string(), "--edges", data_path("edges.csv")});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
}
