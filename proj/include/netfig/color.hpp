#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netfig {

struct Rgb {
  int r = 0;
  int g = 0;
  int b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
  std::string hex() const;  // "#rrggbb"
};

// Exact fraction used for percent values and channel mixing. Always reduced,
// denominator positive. Intermediates go through 128-bit math so reduced
// chains of realistic depth never overflow.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction of(std::int64_t num, std::int64_t den = 1);
  Fraction operator+(const Fraction& other) const;
  Fraction operator*(const Fraction& other) const;
  friend bool operator==(const Fraction&, const Fraction&) = default;

  // Rounds half away from zero to the nearest integer.
  std::int64_t rounded() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A color expression as written: a bare name, an xcolor-style mix chain
// "a!30!b!50!c" (left associative, trailing "a!30" mixes with white), or an
// explicit byte triple "{r,g,b}". The original text is kept for TeX output.
struct ColorSpec {
  enum class Kind { Named, Mix, Triple };

  struct MixStep {
    Fraction percent;  // in [0,100]
    std::string token;
    friend bool operator==(const MixStep&, const MixStep&) = default;
  };

  Kind kind = Kind::Named;
  std::string base;            // Named and Mix
  std::vector<MixStep> steps;  // Mix only
  Rgb triple;                  // Triple only
  std::string source_text;

  static ColorSpec named(std::string name);
  friend bool operator==(const ColorSpec&, const ColorSpec&) = default;
};

// Name -> RGB table. The standard palette carries the base xcolor names plus
// "vertexfill", the light gray used as default fill.
class Palette {
 public:
  static Palette standard();

  void set(std::string name, Rgb value) { table_[std::move(name)] = value; }
  std::optional<Rgb> find(std::string_view name) const;
  const std::map<std::string, Rgb, std::less<>>& entries() const { return table_; }

 private:
  std::map<std::string, Rgb, std::less<>> table_;
};

// Parses a color expression. Throws Error{Parse} on malformed percents,
// syntactically invalid tokens, or triple components outside 0..255.
ColorSpec parse_color(std::string_view text);

// Exact channel values prior to rounding; exposed so mixing laws can be
// checked without the final quantization.
struct ExactRgb {
  std::array<Fraction, 3> channel;
  friend bool operator==(const ExactRgb&, const ExactRgb&) = default;
};

ExactRgb resolve_channels(const ColorSpec& spec, const Palette& palette);
ExactRgb mix_channels(const ExactRgb& a, const Fraction& percent, const ExactRgb& b);

// Full resolution: mixes exactly, rounds half away from zero per channel at
// the end. Throws Error{UnknownColor} on names missing from the palette.
Rgb resolve_rgb(const ColorSpec& spec, const Palette& palette);

}  // namespace netfig
