#include "netfig/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "netfig/color.hpp"
#include "netfig/errors.hpp"

namespace netfig {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct TableWithLines {
  Table table;
  std::vector<int> lines;  // source line number per data row
};

TableWithLines parse_table_lines(std::string_view text, std::string_view source_name) {
  TableWithLines out;
  std::size_t pos = 0;
  int line_number = 0;
  bool have_header = false;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view cell = line.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
      cells.emplace_back(trim(cell));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }

    if (!have_header) {
      for (auto& cell : cells) cell = lower(cell);
      out.table.headers = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != out.table.headers.size()) {
      throw Error(ErrorKind::Parse,
                  std::string(source_name) + " line " + std::to_string(line_number) + ": " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(out.table.headers.size()));
    }
    out.table.rows.push_back(std::move(cells));
    out.lines.push_back(line_number);
  }
  if (!have_header) {
    throw Error(ErrorKind::Parse, std::string(source_name) + ": missing header row");
  }
  return out;
}

// Cell access plus typed parsing with row and column context in every error.
class RowReader {
 public:
  RowReader(const Table& table, const std::vector<int>& lines, std::size_t row,
            std::string_view source)
      : table_(table), lines_(lines), row_(row), source_(source) {}

  std::string context(std::string_view column) const {
    std::string where(source_);
    where += " line " + std::to_string(lines_[row_]) + " column '" + std::string(column) + "'";
    return where;
  }

  std::optional<std::string_view> raw(int col) const {
    if (col < 0) return std::nullopt;
    std::string_view cell = table_.rows[row_][static_cast<std::size_t>(col)];
    if (cell.empty()) return std::nullopt;
    return cell;
  }

  std::optional<std::string> text(int col) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    return std::string(*cell);
  }

  std::optional<double> number(int col, std::string_view column) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    std::string_view body = *cell;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || end != body.data() + body.size() || !std::isfinite(value)) {
      throw Error(ErrorKind::Parse, context(column) + ": malformed number '" + std::string(*cell) + "'");
    }
    return value;
  }

  std::optional<int> integer(int col, std::string_view column) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    int value = 0;
    auto [end, ec] = std::from_chars(cell->data(), cell->data() + cell->size(), value);
    if (ec != std::errc() || end != cell->data() + cell->size()) {
      throw Error(ErrorKind::Parse, context(column) + ": malformed integer '" + std::string(*cell) + "'");
    }
    return value;
  }

  std::optional<Length> length(int col, std::string_view column, Unit unit) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    try {
      return parse_length(*cell, unit);
    } catch (const Error& e) {
      throw Error(e.kind(), context(column) + ": " + e.what());
    }
  }

  std::optional<ColorSpec> color(int col, std::string_view column) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    try {
      return parse_color(*cell);
    } catch (const Error& e) {
      throw Error(e.kind(), context(column) + ": " + e.what());
    }
  }

  // Boolean columns must be filled on every row once declared.
  bool boolean(int col, std::string_view column) const {
    if (col < 0) return false;
    std::string_view cell = table_.rows[row_][static_cast<std::size_t>(col)];
    if (cell.empty()) {
      throw Error(ErrorKind::BooleanCellMissing, context(column) + ": boolean cell left empty");
    }
    std::string v = lower(cell);
    if (v == "true") return true;
    if (v == "false") return false;
    throw Error(ErrorKind::Parse, context(column) + ": expected true or false, got '" + std::string(cell) + "'");
  }

  std::optional<LabelPosition> position(int col, std::string_view column, Unit unit) const {
    auto cell = raw(col);
    if (!cell) return std::nullopt;
    std::string_view body = *cell;
    if (body == "center") return LabelPosition::center();
    {
      std::string_view numeric = body;
      if (!numeric.empty() && numeric.front() == '+') numeric.remove_prefix(1);
      double angle = 0.0;
      auto [end, ec] = std::from_chars(numeric.data(), numeric.data() + numeric.size(), angle);
      if (ec == std::errc() && end == numeric.data() + numeric.size()) {
        return LabelPosition::at_angle(angle);
      }
    }
    std::size_t eq = body.find('=');
    std::string keyword(trim(eq == std::string_view::npos ? body : body.substr(0, eq)));
    std::optional<Length> offset;
    if (eq != std::string_view::npos) {
      try {
        offset = parse_length(body.substr(eq + 1), unit);
      } catch (const Error& e) {
        throw Error(e.kind(), context(column) + ": " + e.what());
      }
    }
    if (!label_keyword_angle(keyword)) {
      throw Error(ErrorKind::Parse, context(column) + ": unknown position '" + keyword + "'");
    }
    return LabelPosition::at_keyword(std::move(keyword), offset);
  }

  // R, G and B cells must be given together or left empty together.
  std::optional<Rgb> rgb_triple(int col_r, int col_g, int col_b) const {
    auto r = raw(col_r);
    auto g = raw(col_g);
    auto b = raw(col_b);
    int given = int(r.has_value()) + int(g.has_value()) + int(b.has_value());
    if (given == 0) return std::nullopt;
    if (given != 3) {
      throw Error(ErrorKind::Parse, context("r") + ": r, g, b must be given together");
    }
    auto channel = [&](std::optional<std::string_view> cell, const char* name) {
      int value = 0;
      auto [end, ec] = std::from_chars(cell->data(), cell->data() + cell->size(), value);
      if (ec != std::errc() || end != cell->data() + cell->size() || value < 0 || value > 255) {
        throw Error(ErrorKind::Parse,
                    context(name) + ": channel out of range '" + std::string(*cell) + "'");
      }
      return value;
    };
    return Rgb{channel(r, "r"), channel(g, "g"), channel(b, "b")};
  }

 private:
  const Table& table_;
  const std::vector<int>& lines_;
  std::size_t row_;
  std::string_view source_;
};

// Maps known column names to indices and collects one warning per unknown.
struct ColumnMap {
  std::map<std::string, int> index;
  std::vector<std::string> warnings;

  int operator[](const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? -1 : it->second;
  }
};

ColumnMap map_columns(const Table& table, const std::set<std::string>& known,
                      std::string_view source_name) {
  ColumnMap map;
  for (std::size_t i = 0; i < table.headers.size(); ++i) {
    const std::string& name = table.headers[i];
    if (known.count(name)) {
      map.index[name] = static_cast<int>(i);
    } else {
      map.warnings.push_back(std::string(source_name) + ": unknown column '" + name +
                             "' ignored");
    }
  }
  return map;
}

const std::set<std::string> kVertexColumns = {
    "id",       "x",         "y",       "size",     "color",    "opacity", "shape",
    "label",    "fontsize",  "fontcolor", "fontscale", "position", "distance", "style",
    "layer",    "nolabel",   "idaslabel", "math",    "rgb",      "pseudo",  "r",
    "g",        "b"};

const std::set<std::string> kEdgeColumns = {
    "u",        "v",         "lw",      "color",    "opacity",  "bend",    "label",
    "fontsize", "fontcolor", "fontscale", "position", "distance", "style",  "loopsize",
    "loopposition", "loopshape", "direct", "math",  "rgb",      "notinbg", "r",
    "g",        "b"};

}  // namespace

Table parse_table(std::string_view text, std::string_view source_name) {
  return parse_table_lines(text, source_name).table;
}

IngestResult<VertexSpec> read_vertices(std::string_view text, Unit default_unit,
                                       std::string_view source_name) {
  TableWithLines parsed = parse_table_lines(text, source_name);
  const Table& table = parsed.table;
  ColumnMap columns = map_columns(table, kVertexColumns, source_name);
  if (columns["id"] < 0) {
    throw Error(ErrorKind::MissingColumn, std::string(source_name) + ": missing column 'id'");
  }

  IngestResult<VertexSpec> out;
  out.warnings = columns.warnings;
  std::set<std::string> seen;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    RowReader cells(table, parsed.lines, row, source_name);
    VertexSpec spec;
    auto id = cells.text(columns["id"]);
    if (!id || id->empty()) {
      throw Error(ErrorKind::Parse, cells.context("id") + ": empty vertex id");
    }
    spec.id = *id;
    if (!seen.insert(spec.id).second) {
      throw Error(ErrorKind::DuplicateVertexId,
                  cells.context("id") + ": duplicate vertex id '" + spec.id + "'");
    }
    spec.x = cells.length(columns["x"], "x", default_unit);
    spec.y = cells.length(columns["y"], "y", default_unit);
    spec.size = cells.length(columns["size"], "size", default_unit);
    spec.color = cells.color(columns["color"], "color");
    spec.opacity = cells.number(columns["opacity"], "opacity");
    spec.shape = cells.text(columns["shape"]);
    spec.label = cells.text(columns["label"]);
    spec.fontsize = cells.text(columns["fontsize"]);
    spec.fontcolor = cells.color(columns["fontcolor"], "fontcolor");
    spec.fontscale = cells.number(columns["fontscale"], "fontscale");
    spec.position = cells.position(columns["position"], "position", default_unit);
    spec.distance = cells.length(columns["distance"], "distance", default_unit);
    spec.style = cells.text(columns["style"]);
    spec.layer = cells.integer(columns["layer"], "layer");
    spec.no_label = cells.boolean(columns["nolabel"], "nolabel");
    spec.id_as_label = cells.boolean(columns["idaslabel"], "idaslabel");
    spec.math = cells.boolean(columns["math"], "math");
    spec.rgb_mode = cells.boolean(columns["rgb"], "rgb");
    spec.pseudo = cells.boolean(columns["pseudo"], "pseudo");
    spec.rgb = cells.rgb_triple(columns["r"], columns["g"], columns["b"]);
    if (spec.rgb) spec.rgb_mode = true;
    out.specs.push_back(std::move(spec));
  }
  return out;
}

IngestResult<EdgeSpec> read_edges(std::string_view text,
                                  const std::vector<std::string>& known_ids, Unit default_unit,
                                  std::string_view source_name) {
  TableWithLines parsed = parse_table_lines(text, source_name);
  const Table& table = parsed.table;
  ColumnMap columns = map_columns(table, kEdgeColumns, source_name);
  if (columns["u"] < 0) {
    throw Error(ErrorKind::MissingColumn, std::string(source_name) + ": missing column 'u'");
  }
  if (columns["v"] < 0) {
    throw Error(ErrorKind::MissingColumn, std::string(source_name) + ": missing column 'v'");
  }

  std::set<std::string_view> ids(known_ids.begin(), known_ids.end());
  IngestResult<EdgeSpec> out;
  out.warnings = columns.warnings;
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    RowReader cells(table, parsed.lines, row, source_name);
    EdgeSpec spec;
    auto u = cells.text(columns["u"]);
    auto v = cells.text(columns["v"]);
    if (!u || !v) {
      throw Error(ErrorKind::Parse, cells.context(!u ? "u" : "v") + ": empty endpoint");
    }
    spec.u = *u;
    spec.v = *v;
    for (const std::string& endpoint : {spec.u, spec.v}) {
      if (!ids.count(endpoint)) {
        throw Error(ErrorKind::UnknownEndpoint,
                    cells.context("u") + ": unknown endpoint '" + endpoint + "'");
      }
    }
    spec.lw = cells.length(columns["lw"], "lw", Unit::Pt);
    spec.color = cells.color(columns["color"], "color");
    spec.opacity = cells.number(columns["opacity"], "opacity");
    spec.bend = cells.number(columns["bend"], "bend");
    spec.label = cells.text(columns["label"]);
    spec.fontsize = cells.text(columns["fontsize"]);
    spec.fontcolor = cells.color(columns["fontcolor"], "fontcolor");
    spec.fontscale = cells.number(columns["fontscale"], "fontscale");
    spec.position = cells.position(columns["position"], "position", default_unit);
    spec.distance = cells.number(columns["distance"], "distance");
    spec.style = cells.text(columns["style"]);
    spec.loopsize = cells.length(columns["loopsize"], "loopsize", default_unit);
    spec.loopposition = cells.number(columns["loopposition"], "loopposition");
    spec.loopshape = cells.number(columns["loopshape"], "loopshape");
    spec.direct = cells.boolean(columns["direct"], "direct");
    spec.math = cells.boolean(columns["math"], "math");
    spec.rgb_mode = cells.boolean(columns["rgb"], "rgb");
    spec.not_in_bg = cells.boolean(columns["notinbg"], "notinbg");
    spec.rgb = cells.rgb_triple(columns["r"], columns["g"], columns["b"]);
    if (spec.rgb) spec.rgb_mode = true;
    out.specs.push_back(std::move(spec));
  }
  return out;
}

namespace {

std::string shortest(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string cell_guard(const std::string& value, const char* column) {
  if (value.find(',') != std::string::npos || value.find('\n') != std::string::npos) {
    throw Error(ErrorKind::Parse,
                std::string("cannot serialize ") + column + " containing a comma or newline");
  }
  return value;
}

std::string position_cell(const LabelPosition& position, Unit unit) {
  switch (position.kind) {
    case LabelPosition::Kind::Center:
      return "center";
    case LabelPosition::Kind::Angle:
      return shortest(position.angle_deg);
    case LabelPosition::Kind::Keyword:
      if (position.offset) return position.keyword + "=" + shortest(position.offset->in(unit));
      return position.keyword;
  }
  return "center";
}

// Column layout shared by both writers. A column appears when some spec sets
// the field; once a column is active every row prints a cell, so boolean
// columns come out as explicit true/false on every row.
template <class Spec>
struct ColumnDef {
  std::string header;
  bool (*has)(const Spec&);
  std::string (*print)(const Spec&, Unit);
};

template <class Spec>
std::string write_table(const std::vector<Spec>& specs, const std::vector<ColumnDef<Spec>>& defs,
                        Unit unit) {
  std::vector<const ColumnDef<Spec>*> active;
  for (const auto& def : defs) {
    for (const auto& spec : specs) {
      if (def.has(spec)) {
        active.push_back(&def);
        break;
      }
    }
  }
  std::string out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    if (i) out += ',';
    out += active[i]->header;
  }
  out += '\n';
  for (const auto& spec : specs) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (i) out += ',';
      out += active[i]->print(spec, unit);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string write_vertices_csv(const std::vector<VertexSpec>& specs, Unit default_unit) {
  using Def = ColumnDef<VertexSpec>;
  static const std::vector<Def> defs = {
      {"id", [](const VertexSpec&) { return true; },
       [](const VertexSpec& s, Unit) { return cell_guard(s.id, "id"); }},
      {"x", [](const VertexSpec& s) { return s.x.has_value(); },
       [](const VertexSpec& s, Unit u) { return s.x ? shortest(s.x->in(u)) : std::string(); }},
      {"y", [](const VertexSpec& s) { return s.y.has_value(); },
       [](const VertexSpec& s, Unit u) { return s.y ? shortest(s.y->in(u)) : std::string(); }},
      {"size", [](const VertexSpec& s) { return s.size.has_value(); },
       [](const VertexSpec& s, Unit u) { return s.size ? shortest(s.size->in(u)) : std::string(); }},
      {"color", [](const VertexSpec& s) { return s.color.has_value(); },
       [](const VertexSpec& s, Unit) {
         return s.color ? cell_guard(s.color->source_text, "color") : std::string();
       }},
      {"opacity", [](const VertexSpec& s) { return s.opacity.has_value(); },
       [](const VertexSpec& s, Unit) { return s.opacity ? shortest(*s.opacity) : std::string(); }},
      {"shape", [](const VertexSpec& s) { return s.shape.has_value(); },
       [](const VertexSpec& s, Unit) { return s.shape ? cell_guard(*s.shape, "shape") : std::string(); }},
      {"label", [](const VertexSpec& s) { return s.label.has_value(); },
       [](const VertexSpec& s, Unit) { return s.label ? cell_guard(*s.label, "label") : std::string(); }},
      {"fontsize", [](const VertexSpec& s) { return s.fontsize.has_value(); },
       [](const VertexSpec& s, Unit) {
         return s.fontsize ? cell_guard(*s.fontsize, "fontsize") : std::string();
       }},
      {"fontcolor", [](const VertexSpec& s) { return s.fontcolor.has_value(); },
       [](const VertexSpec& s, Unit) {
         return s.fontcolor ? cell_guard(s.fontcolor->source_text, "fontcolor") : std::string();
       }},
      {"fontscale", [](const VertexSpec& s) { return s.fontscale.has_value(); },
       [](const VertexSpec& s, Unit) { return s.fontscale ? shortest(*s.fontscale) : std::string(); }},
      {"position", [](const VertexSpec& s) { return s.position.has_value(); },
       [](const VertexSpec& s, Unit u) {
         return s.position ? position_cell(*s.position, u) : std::string();
       }},
      {"distance", [](const VertexSpec& s) { return s.distance.has_value(); },
       [](const VertexSpec& s, Unit u) {
         return s.distance ? shortest(s.distance->in(u)) : std::string();
       }},
      {"style", [](const VertexSpec& s) { return s.style.has_value(); },
       [](const VertexSpec& s, Unit) { return s.style ? cell_guard(*s.style, "style") : std::string(); }},
      {"layer", [](const VertexSpec& s) { return s.layer.has_value(); },
       [](const VertexSpec& s, Unit) { return s.layer ? std::to_string(*s.layer) : std::string(); }},
      {"R", [](const VertexSpec& s) { return s.rgb.has_value(); },
       [](const VertexSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->r) : std::string(); }},
      {"G", [](const VertexSpec& s) { return s.rgb.has_value(); },
       [](const VertexSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->g) : std::string(); }},
      {"B", [](const VertexSpec& s) { return s.rgb.has_value(); },
       [](const VertexSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->b) : std::string(); }},
      {"RGB", [](const VertexSpec& s) { return s.rgb_mode && !s.rgb; },
       [](const VertexSpec& s, Unit) { return std::string(s.rgb_mode ? "true" : "false"); }},
      {"NoLabel", [](const VertexSpec& s) { return s.no_label; },
       [](const VertexSpec& s, Unit) { return std::string(s.no_label ? "true" : "false"); }},
      {"IdAsLabel", [](const VertexSpec& s) { return s.id_as_label; },
       [](const VertexSpec& s, Unit) { return std::string(s.id_as_label ? "true" : "false"); }},
      {"Math", [](const VertexSpec& s) { return s.math; },
       [](const VertexSpec& s, Unit) { return std::string(s.math ? "true" : "false"); }},
      {"Pseudo", [](const VertexSpec& s) { return s.pseudo; },
       [](const VertexSpec& s, Unit) { return std::string(s.pseudo ? "true" : "false"); }},
  };
  return write_table(specs, defs, default_unit);
}

std::string write_edges_csv(const std::vector<EdgeSpec>& specs, Unit default_unit) {
  using Def = ColumnDef<EdgeSpec>;
  static const std::vector<Def> defs = {
      {"u", [](const EdgeSpec&) { return true; },
       [](const EdgeSpec& s, Unit) { return cell_guard(s.u, "u"); }},
      {"v", [](const EdgeSpec&) { return true; },
       [](const EdgeSpec& s, Unit) { return cell_guard(s.v, "v"); }},
      {"lw", [](const EdgeSpec& s) { return s.lw.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.lw ? shortest(s.lw->in(Unit::Pt)) : std::string(); }},
      {"color", [](const EdgeSpec& s) { return s.color.has_value(); },
       [](const EdgeSpec& s, Unit) {
         return s.color ? cell_guard(s.color->source_text, "color") : std::string();
       }},
      {"opacity", [](const EdgeSpec& s) { return s.opacity.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.opacity ? shortest(*s.opacity) : std::string(); }},
      {"bend", [](const EdgeSpec& s) { return s.bend.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.bend ? shortest(*s.bend) : std::string(); }},
      {"label", [](const EdgeSpec& s) { return s.label.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.label ? cell_guard(*s.label, "label") : std::string(); }},
      {"fontsize", [](const EdgeSpec& s) { return s.fontsize.has_value(); },
       [](const EdgeSpec& s, Unit) {
         return s.fontsize ? cell_guard(*s.fontsize, "fontsize") : std::string();
       }},
      {"fontcolor", [](const EdgeSpec& s) { return s.fontcolor.has_value(); },
       [](const EdgeSpec& s, Unit) {
         return s.fontcolor ? cell_guard(s.fontcolor->source_text, "fontcolor") : std::string();
       }},
      {"fontscale", [](const EdgeSpec& s) { return s.fontscale.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.fontscale ? shortest(*s.fontscale) : std::string(); }},
      {"position", [](const EdgeSpec& s) { return s.position.has_value(); },
       [](const EdgeSpec& s, Unit u) {
         return s.position ? position_cell(*s.position, u) : std::string();
       }},
      {"distance", [](const EdgeSpec& s) { return s.distance.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.distance ? shortest(*s.distance) : std::string(); }},
      {"style", [](const EdgeSpec& s) { return s.style.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.style ? cell_guard(*s.style, "style") : std::string(); }},
      {"loopsize", [](const EdgeSpec& s) { return s.loopsize.has_value(); },
       [](const EdgeSpec& s, Unit u) { return s.loopsize ? shortest(s.loopsize->in(u)) : std::string(); }},
      {"loopposition", [](const EdgeSpec& s) { return s.loopposition.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.loopposition ? shortest(*s.loopposition) : std::string(); }},
      {"loopshape", [](const EdgeSpec& s) { return s.loopshape.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.loopshape ? shortest(*s.loopshape) : std::string(); }},
      {"R", [](const EdgeSpec& s) { return s.rgb.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->r) : std::string(); }},
      {"G", [](const EdgeSpec& s) { return s.rgb.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->g) : std::string(); }},
      {"B", [](const EdgeSpec& s) { return s.rgb.has_value(); },
       [](const EdgeSpec& s, Unit) { return s.rgb ? std::to_string(s.rgb->b) : std::string(); }},
      {"RGB", [](const EdgeSpec& s) { return s.rgb_mode && !s.rgb; },
       [](const EdgeSpec& s, Unit) { return std::string(s.rgb_mode ? "true" : "false"); }},
      {"Direct", [](const EdgeSpec& s) { return s.direct; },
       [](const EdgeSpec& s, Unit) { return std::string(s.direct ? "true" : "false"); }},
      {"Math", [](const EdgeSpec& s) { return s.math; },
       [](const EdgeSpec& s, Unit) { return std::string(s.math ? "true" : "false"); }},
      {"NotInBG", [](const EdgeSpec& s) { return s.not_in_bg; },
       [](const EdgeSpec& s, Unit) { return std::string(s.not_in_bg ? "true" : "false"); }},
  };
  return write_table(specs, defs, default_unit);
}

}  // namespace netfig
