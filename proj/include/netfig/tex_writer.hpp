#pragma once

#include <optional>
#include <string>

#include "netfig/network.hpp"
#include "netfig/settings.hpp"

namespace netfig {

struct TexOptions {
  bool standalone = false;  // wrap in a compilable document

  struct ClipRect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  };
  std::optional<ClipRect> clip;
};

// Serializes the network back to LaTeX source for the drawing package the
// tables model. Only explicitly set options appear, in table order; numbers
// print with up to three decimals and no trailing zeros; coordinate lengths
// are suffix-free in the default unit while pt-denominated widths keep their
// pt suffix. Settings commands appear only for non-default values.
std::string emit_tex(const Network& network, const Settings& settings,
                     const TexOptions& options = {});

}  // namespace netfig
