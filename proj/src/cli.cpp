#include "netfig/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "netfig/csv.hpp"
#include "netfig/errors.hpp"
#include "netfig/network.hpp"
#include "netfig/scene.hpp"
#include "netfig/settings.hpp"
#include "netfig/svg_writer.hpp"
#include "netfig/tex_writer.hpp"

namespace netfig {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Settings files hold "key = value" lines with # comments. Directives apply
// in order, so a DefaultUnit line affects how later lengths read.
Settings apply_settings_text(Settings settings, const std::string& text,
                             const std::string& source_name) {
  std::istringstream lines(text);
  std::string line;
  int line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Parse, source_name + " line " + std::to_string(line_number) +
                                        ": expected key = value");
    }
    try {
      Directive directive =
          parse_directive(body.substr(0, eq), body.substr(eq + 1), settings.default_unit);
      settings = apply_setting(std::move(settings), directive);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  source_name + " line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return settings;
}

Settings apply_set_flag(Settings settings, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::Usage, "--set expects key=value, got '" + assignment + "'");
  }
  Directive directive = parse_directive(std::string_view(assignment).substr(0, eq),
                                        std::string_view(assignment).substr(eq + 1),
                                        settings.default_unit);
  return apply_setting(std::move(settings), directive);
}

struct EdgeFileArg {
  std::string edges_path;
  std::string vertices_path;  // empty = use the shared vertex pool
};

EdgeFileArg split_edge_arg(const std::string& arg) {
  auto at = arg.find('@');
  if (at == std::string::npos) return {arg, ""};
  return {arg.substr(0, at), arg.substr(at + 1)};
}

std::pair<int, int> parse_layer_pair(const std::string& value) {
  auto comma = value.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorKind::Usage, "--edge-layer expects two layers like 1,2");
  }
  try {
    int a = std::stoi(value.substr(0, comma));
    int b = std::stoi(value.substr(comma + 1));
    return std::minmax(a, b);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Usage, "--edge-layer expects two layers like 1,2");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"network figure compiler: tabular graph descriptions to TeX or SVG"};
  app.name("netfig");

  std::vector<std::string> vertex_files;
  std::vector<std::string> edge_files;
  std::string format = "tex";
  std::string output;
  std::string mode;
  int layer_filter = 0;
  std::vector<std::string> edge_layer_flags;
  std::string settings_file;
  std::vector<std::string> set_flags;
  bool standalone = false;

  app.add_option("--vertices", vertex_files, "vertex CSV file (repeatable)");
  app.add_option("--edges", edge_files,
                 "edge CSV file, optionally with its own vertex file as "
                 "<edges>@<vertices> (repeatable)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"tex", "svg"}));
  app.add_option("--output", output, "output file (default stdout)");
  app.add_option("--mode", mode, "drawing mode")
      ->check(CLI::IsMember({"flat", "multilayer", "multilayer3d"}));
  app.add_option("--layer", layer_filter, "draw only vertices on this layer");
  app.add_option("--edge-layer", edge_layer_flags,
                 "draw only edges between these layers, e.g. 1,2 (repeatable)");
  app.add_option("--settings", settings_file, "settings file with key = value lines");
  app.add_option("--set", set_flags, "single setting, e.g. LayerDistance=-1.5 (repeatable)");
  app.add_flag("--standalone", standalone, "wrap TeX output in a compilable document");

  if (args.empty()) {
    err << app.help();
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Settings settings;
    if (!settings_file.empty()) {
      settings = apply_settings_text(std::move(settings), read_file(settings_file), settings_file);
    }
    for (const auto& assignment : set_flags) {
      settings = apply_set_flag(std::move(settings), assignment);
    }
    if (mode == "flat") settings.mode = RenderMode::Flat;
    if (mode == "multilayer") settings.mode = RenderMode::Multilayer2D;
    if (mode == "multilayer3d") settings.mode = RenderMode::Multilayer3D;

    std::vector<std::string> warnings;
    std::vector<VertexSpec> vertices;
    std::set<std::string> drawn_files(vertex_files.begin(), vertex_files.end());
    for (const auto& path : vertex_files) {
      auto result = read_vertices(read_file(path), settings.default_unit, path);
      for (auto& w : result.warnings) warnings.push_back(std::move(w));
      for (auto& spec : result.specs) vertices.push_back(std::move(spec));
    }

    std::vector<std::string> pool_ids;
    for (const auto& v : vertices) pool_ids.push_back(v.id);

    std::vector<EdgeSpec> edges;
    for (const auto& arg : edge_files) {
      EdgeFileArg parts = split_edge_arg(arg);
      std::vector<std::string> known = pool_ids;
      if (!parts.vertices_path.empty()) {
        auto bound = read_vertices(read_file(parts.vertices_path), settings.default_unit,
                                   parts.vertices_path);
        for (auto& w : bound.warnings) warnings.push_back(std::move(w));
        known.clear();
        for (const auto& v : bound.specs) known.push_back(v.id);
        if (!drawn_files.count(parts.vertices_path)) {
          // Bound vertices anchor the edges but are not drawn themselves.
          std::set<std::string> present(pool_ids.begin(), pool_ids.end());
          for (auto& spec : bound.specs) {
            if (present.count(spec.id)) continue;
            spec.pseudo = true;
            pool_ids.push_back(spec.id);
            vertices.push_back(std::move(spec));
          }
        }
      }
      auto result = read_edges(read_file(parts.edges_path), known, settings.default_unit,
                               parts.edges_path);
      for (auto& w : result.warnings) warnings.push_back(std::move(w));
      for (auto& spec : result.specs) edges.push_back(std::move(spec));
    }

    // Layer of every vertex before filtering, for the edge-layer filter.
    std::map<std::string, int> layer_of;
    for (const auto& v : vertices) layer_of[v.id] = v.layer.value_or(1);

    if (layer_filter != 0) {
      for (auto& v : vertices) {
        if (v.layer.value_or(1) != layer_filter) v.pseudo = true;
      }
    }

    if (!edge_layer_flags.empty()) {
      std::set<std::pair<int, int>> allowed;
      for (const auto& flag : edge_layer_flags) allowed.insert(parse_layer_pair(flag));
      std::vector<EdgeSpec> kept;
      for (auto& e : edges) {
        auto pair = std::minmax(layer_of[e.u], layer_of[e.v]);
        if (allowed.count(pair)) kept.push_back(std::move(e));
      }
      edges = std::move(kept);
    }

    Network network = build_network(std::move(vertices), std::move(edges));

    std::string rendered;
    if (format == "svg") {
      Scene scene = scene_build(network, settings);
      for (auto& w : scene.warnings) warnings.push_back(std::move(w));
      rendered = render_svg(scene);
    } else {
      TexOptions options;
      options.standalone = standalone;
      rendered = emit_tex(network, settings, options);
    }

    for (const auto& w : warnings) err << "warning: " << w << "\n";

    if (output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error(ErrorKind::Io, "cannot write '" + output + "'");
      file << rendered;
    }
    return 0;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace netfig
