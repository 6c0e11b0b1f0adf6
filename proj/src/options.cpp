#include "netfig/options.hpp"

namespace netfig {

std::optional<double> label_keyword_angle(std::string_view keyword) {
  if (keyword == "above") return 90.0;
  if (keyword == "below") return 270.0;
  if (keyword == "left") return 180.0;
  if (keyword == "right") return 0.0;
  if (keyword == "above left") return 135.0;
  if (keyword == "above right") return 45.0;
  if (keyword == "below left") return 225.0;
  if (keyword == "below right") return 315.0;
  return std::nullopt;
}

}  // namespace netfig
