#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netfig/options.hpp"

namespace netfig {

// Raw TeX lines drawn inside a named layer; passed through by the TeX writer
// and skipped with a warning by the SVG backend.
struct LayerBlock {
  int layer = 1;
  std::string raw_tex;

  friend bool operator==(const LayerBlock&, const LayerBlock&) = default;
};

struct Network {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<TextSpec> texts;
  std::vector<PlaneSpec> planes;
  std::vector<LayerBlock> layer_blocks;

  const VertexSpec* find_vertex(std::string_view id) const;
};

// Checks referential integrity and option ranges before any drawing happens:
// unique well-formed vertex ids, known edge endpoints and path references,
// opacities in [0,1], |bend| < 180, positive sizes, layers >= 1, and no
// bend or label on multi-point paths.
Network build_network(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                      std::vector<TextSpec> texts = {}, std::vector<PlaneSpec> planes = {},
                      std::vector<LayerBlock> layer_blocks = {});

}  // namespace netfig
