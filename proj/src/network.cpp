#include "netfig/network.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "netfig/errors.hpp"

namespace netfig {

const VertexSpec* Network::find_vertex(std::string_view id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

namespace {

void check_id(const std::string& id) {
  if (id.empty()) throw Error(ErrorKind::InvalidOption, "vertex id must not be empty");
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '$' || c == '\\') {
      throw Error(ErrorKind::InvalidOption,
                  "vertex id '" + id + "' must not contain spaces or math");
    }
  }
}

void check_opacity(const std::optional<double>& value, const std::string& where) {
  if (value && !(*value >= 0.0 && *value <= 1.0)) {
    throw Error(ErrorKind::InvalidOption, "opacity out of range on " + where);
  }
}

void check_angle(const std::optional<double>& value, const char* field, const std::string& where) {
  if (value && !(*value >= -360.0 && *value <= 360.0)) {
    throw Error(ErrorKind::InvalidOption, std::string(field) + " out of range on " + where);
  }
}

void check_positive_length(const std::optional<Length>& value, const char* field,
                           const std::string& where) {
  if (value && !(value->cm > 0.0 && std::isfinite(value->cm))) {
    throw Error(ErrorKind::InvalidOption, std::string(field) + " must be positive on " + where);
  }
}

void check_fontscale(const std::optional<double>& value, const std::string& where) {
  if (value && !(*value > 0.0 && std::isfinite(*value))) {
    throw Error(ErrorKind::InvalidOption, "fontscale must be positive on " + where);
  }
}

void check_layer(const std::optional<int>& value, const std::string& where) {
  if (value && *value < 1) {
    throw Error(ErrorKind::InvalidOption, "layer must be >= 1 on " + where);
  }
}

void check_position(const std::optional<LabelPosition>& value, const std::string& where) {
  if (!value) return;
  if (value->kind == LabelPosition::Kind::Angle) {
    if (!(value->angle_deg >= -360.0 && value->angle_deg <= 360.0)) {
      throw Error(ErrorKind::InvalidOption, "position angle out of range on " + where);
    }
  } else if (value->kind == LabelPosition::Kind::Keyword) {
    if (!label_keyword_angle(value->keyword)) {
      throw Error(ErrorKind::InvalidOption,
                  "unknown position keyword '" + value->keyword + "' on " + where);
    }
  }
}

}  // namespace

Network build_network(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                      std::vector<TextSpec> texts, std::vector<PlaneSpec> planes,
                      std::vector<LayerBlock> layer_blocks) {
  std::set<std::string> ids;
  for (const auto& v : vertices) {
    check_id(v.id);
    if (!ids.insert(v.id).second) {
      throw Error(ErrorKind::DuplicateVertexId, "duplicate vertex id '" + v.id + "'");
    }
    std::string where = "vertex '" + v.id + "'";
    check_opacity(v.opacity, where);
    check_positive_length(v.size, "size", where);
    check_positive_length(v.distance, "distance", where);
    check_fontscale(v.fontscale, where);
    check_layer(v.layer, where);
    check_position(v.position, where);
    if (v.fontcolor && v.fontcolor->kind == ColorSpec::Kind::Triple) {
      throw Error(ErrorKind::InvalidOption, "fontcolor takes a named color on " + where);
    }
  }

  for (const auto& e : edges) {
    std::string where = "edge (" + e.u + "," + e.v + ")";
    if (!ids.count(e.u)) throw Error(ErrorKind::UnknownEndpoint, "unknown endpoint '" + e.u + "' on " + where);
    if (!ids.count(e.v)) throw Error(ErrorKind::UnknownEndpoint, "unknown endpoint '" + e.v + "' on " + where);
    check_opacity(e.opacity, where);
    check_positive_length(e.lw, "lw", where);
    check_positive_length(e.loopsize, "loopsize", where);
    check_fontscale(e.fontscale, where);
    check_position(e.position, where);
    if (e.bend && !(std::abs(*e.bend) < 180.0)) {
      throw Error(ErrorKind::InvalidOption, "bend must satisfy |bend| < 180 on " + where);
    }
    if (e.distance && !(*e.distance >= 0.0 && *e.distance <= 1.0)) {
      throw Error(ErrorKind::InvalidOption, "distance must be in [0,1] on " + where);
    }
    check_angle(e.loopposition, "loopposition", where);
    if (e.loopshape && !(*e.loopshape > 0.0 && *e.loopshape < 360.0)) {
      throw Error(ErrorKind::InvalidOption, "loopshape must be in (0,360) on " + where);
    }
    for (const auto& w : e.path) {
      if (w.kind == Waypoint::Kind::Vertex && !ids.count(w.id)) {
        throw Error(ErrorKind::UnknownPathRef, "unknown path reference '" + w.id + "' on " + where);
      }
    }
    if (!e.path.empty()) {
      if (e.bend && *e.bend != 0.0) {
        throw Error(ErrorKind::InvalidOption, "bend is not supported on paths, " + where);
      }
      if (e.label) {
        throw Error(ErrorKind::InvalidOption, "labels are not supported on paths, " + where);
      }
    }
    if (e.fontcolor && e.fontcolor->kind == ColorSpec::Kind::Triple) {
      throw Error(ErrorKind::InvalidOption, "fontcolor takes a named color on " + where);
    }
  }

  for (const auto& t : texts) {
    std::string where = "text '" + t.content + "'";
    check_opacity(t.opacity, where);
    check_angle(t.rotation, "rotation", where);
    check_layer(t.layer, where);
    check_position(t.position, where);
    check_positive_length(t.width, "width", where);
  }

  for (const auto& p : planes) {
    std::string where = "plane";
    check_opacity(p.opacity, where);
    check_positive_length(p.width, "width", where);
    check_positive_length(p.height, "height", where);
    check_positive_length(p.grid, "grid", where);
    check_layer(p.layer, where);
  }

  for (const auto& b : layer_blocks) {
    if (b.layer < 1) throw Error(ErrorKind::InvalidOption, "layer must be >= 1 on layer block");
  }

  Network net;
  net.vertices = std::move(vertices);
  net.edges = std::move(edges);
  net.texts = std::move(texts);
  net.planes = std::move(planes);
  net.layer_blocks = std::move(layer_blocks);
  return net;
}

}  // namespace netfig
