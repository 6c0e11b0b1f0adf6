#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace netfig {

enum class Unit { Cm, Mm, Pt, In };

// Conversion factor unit -> centimeters. pt is the TeX point (72.27 per inch).
double unit_to_cm(Unit unit);
const char* unit_name(Unit unit);
std::optional<Unit> unit_from_name(std::string_view name);

// A physical length stored canonically in centimeters. Coordinates may be
// negative; fields that require positive lengths validate at entry.
struct Length {
  double cm = 0.0;

  static Length of(double value, Unit unit) { return {value * unit_to_cm(unit)}; }
  static Length centimeters(double value) { return {value}; }
  static Length points(double value) { return of(value, Unit::Pt); }

  double in(Unit unit) const { return cm / unit_to_cm(unit); }

  friend bool operator==(const Length&, const Length&) = default;
};

// Parses "1.5", "2pt", "-0.3cm", "12 mm"; bare numbers use default_unit.
// Throws Error{Parse} on malformed text or non-finite values.
Length parse_length(std::string_view text, Unit default_unit);

}  // namespace netfig
