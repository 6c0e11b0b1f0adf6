#pragma once

#include <string>

#include "netfig/scene.hpp"

namespace netfig {

// Renders the scene to a self-contained SVG document. Geometry stays in the
// model's y-up frame inside one scale(1,-1) group; every text element flips
// back locally so glyphs stay upright. 96 px per inch.
std::string render_svg(const Scene& scene);

}  // namespace netfig
