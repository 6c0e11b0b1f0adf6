#include "netfig/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "netfig/errors.hpp"

namespace netfig {

double unit_to_cm(Unit unit) {
  switch (unit) {
    case Unit::Cm: return 1.0;
    case Unit::Mm: return 0.1;
    case Unit::Pt: return 2.54 / 72.27;
    case Unit::In: return 2.54;
  }
  return 1.0;
}

const char* unit_name(Unit unit) {
  switch (unit) {
    case Unit::Cm: return "cm";
    case Unit::Mm: return "mm";
    case Unit::Pt: return "pt";
    case Unit::In: return "in";
  }
  return "cm";
}

std::optional<Unit> unit_from_name(std::string_view name) {
  if (name == "cm") return Unit::Cm;
  if (name == "mm") return Unit::Mm;
  if (name == "pt") return Unit::Pt;
  if (name == "in") return Unit::In;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Length parse_length(std::string_view text, Unit default_unit) {
  std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorKind::Parse, "empty length");

  std::size_t split = body.size();
  while (split > 0 && std::isalpha(static_cast<unsigned char>(body[split - 1]))) --split;
  std::string_view number_part = trim(body.substr(0, split));
  std::string_view unit_part = body.substr(split);

  Unit unit = default_unit;
  if (!unit_part.empty()) {
    auto parsed = unit_from_name(unit_part);
    if (!parsed) {
      throw Error(ErrorKind::Parse,
                  "unknown unit '" + std::string(unit_part) + "' in length '" + std::string(text) + "'");
    }
    unit = *parsed;
  }
  if (number_part.empty()) {
    throw Error(ErrorKind::Parse, "missing number in length '" + std::string(text) + "'");
  }

  if (number_part.front() == '+') number_part.remove_prefix(1);
  double value = 0.0;
  auto [end, ec] = std::from_chars(number_part.data(), number_part.data() + number_part.size(), value);
  if (ec != std::errc() || end != number_part.data() + number_part.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::Parse, "malformed length '" + std::string(text) + "'");
  }
  return Length::of(value, unit);
}

}  // namespace netfig
