#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netfig/options.hpp"
#include "netfig/units.hpp"

namespace netfig {

// Plain comma-separated tables: no quoting, every cell trimmed, first row is
// the header (matched case-insensitively). An empty cell means "not set";
// boolean columns are the exception and require an explicit true or false.

struct Table {
  std::vector<std::string> headers;  // lowercased
  std::vector<std::vector<std::string>> rows;
};

// Throws Error{Parse} on rows whose cell count differs from the header.
Table parse_table(std::string_view text, std::string_view source_name = "");

template <class Spec>
struct IngestResult {
  std::vector<Spec> specs;
  std::vector<std::string> warnings;  // unknown columns, one note per header
};

// Vertex tables need an id column; duplicate ids are rejected here so the
// error can name the offending row.
IngestResult<VertexSpec> read_vertices(std::string_view text, Unit default_unit,
                                       std::string_view source_name = "");

// Edge tables need u and v columns; endpoints are checked against known_ids.
IngestResult<EdgeSpec> read_edges(std::string_view text,
                                  const std::vector<std::string>& known_ids, Unit default_unit,
                                  std::string_view source_name = "");

// Inverse of the readers over CSV-shaped specs: emits only columns some spec
// actually sets, formats numbers so they read back to the same values.
std::string write_vertices_csv(const std::vector<VertexSpec>& specs, Unit default_unit);
std::string write_edges_csv(const std::vector<EdgeSpec>& specs, Unit default_unit);

}  // namespace netfig
