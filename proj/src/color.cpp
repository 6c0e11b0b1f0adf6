#include "netfig/color.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "netfig/errors.hpp"

namespace netfig {

namespace {

using Int128 = __int128;

Fraction reduce128(Int128 num, Int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int128 a = num < 0 ? -num : num;
  Int128 b = den;
  while (b != 0) {
    Int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  }
  return Fraction{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

Fraction Fraction::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::Parse, "fraction with zero denominator");
  return reduce128(num, den);
}

Fraction Fraction::operator+(const Fraction& other) const {
  return reduce128(static_cast<Int128>(num) * other.den + static_cast<Int128>(other.num) * den,
                   static_cast<Int128>(den) * other.den);
}

Fraction Fraction::operator*(const Fraction& other) const {
  return reduce128(static_cast<Int128>(num) * other.num, static_cast<Int128>(den) * other.den);
}

std::int64_t Fraction::rounded() const {
  // floor((2|n| + d) / 2d) with the sign restored: half rounds away from zero.
  Int128 n = num < 0 ? -static_cast<Int128>(num) : static_cast<Int128>(num);
  Int128 magnitude = (2 * n + den) / (2 * static_cast<Int128>(den));
  return static_cast<std::int64_t>(num < 0 ? -magnitude : magnitude);
}

std::string Rgb::hex() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

ColorSpec ColorSpec::named(std::string name) {
  ColorSpec spec;
  spec.kind = Kind::Named;
  spec.base = name;
  spec.source_text = std::move(name);
  return spec;
}

Palette Palette::standard() {
  Palette p;
  p.set("red", {255, 0, 0});
  p.set("green", {0, 255, 0});
  p.set("blue", {0, 0, 255});
  p.set("cyan", {0, 255, 255});
  p.set("magenta", {255, 0, 255});
  p.set("yellow", {255, 255, 0});
  p.set("black", {0, 0, 0});
  p.set("gray", {128, 128, 128});
  p.set("white", {255, 255, 255});
  p.set("darkgray", {64, 64, 64});
  p.set("lightgray", {191, 191, 191});
  p.set("brown", {191, 128, 64});
  p.set("lime", {191, 255, 0});
  p.set("olive", {128, 128, 0});
  p.set("orange", {255, 128, 0});
  p.set("pink", {255, 191, 191});
  p.set("purple", {191, 0, 64});
  p.set("teal", {0, 128, 128});
  p.set("violet", {128, 0, 128});
  p.set("vertexfill", {191, 191, 191});
  return p;
}

std::optional<Rgb> Palette::find(std::string_view name) const {
  auto it = table_.find(name);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_token(std::string_view token) {
  if (token.empty() || !std::isalpha(static_cast<unsigned char>(token.front()))) return false;
  for (char c : token) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Percent literal as an exact fraction: "70" -> 70, "12.5" -> 25/2.
Fraction parse_percent(std::string_view text, std::string_view whole) {
  text = trim(text);
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  std::size_t i = 0;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
    num = num * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || den > 100000000) break;
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any_digit = true;
    }
  }
  if (!any_digit || i != text.size()) {
    throw Error(ErrorKind::Parse, "malformed percent in color '" + std::string(whole) + "'");
  }
  Fraction percent = Fraction::of(num, den);
  if (percent.value() > 100.0) {
    throw Error(ErrorKind::Parse, "percent out of range in color '" + std::string(whole) + "'");
  }
  return percent;
}

ColorSpec parse_triple(std::string_view body, std::string_view whole) {
  ColorSpec spec;
  spec.kind = ColorSpec::Kind::Triple;
  spec.source_text = std::string(whole);
  int parts[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t comma = body.find(',', start);
    bool last = k == 2;
    if (last != (comma == std::string_view::npos)) {
      throw Error(ErrorKind::Parse, "expected three components in color '" + std::string(whole) + "'");
    }
    std::string_view cell = trim(body.substr(start, last ? std::string_view::npos : comma - start));
    int value = 0;
    auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || end != cell.data() + cell.size() || value < 0 || value > 255) {
      throw Error(ErrorKind::Parse, "component out of range in color '" + std::string(whole) + "'");
    }
    parts[k] = value;
    if (!last) start = comma + 1;
  }
  spec.triple = {parts[0], parts[1], parts[2]};
  return spec;
}

}  // namespace

ColorSpec parse_color(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw Error(ErrorKind::Parse, "empty color");

  if (body.front() == '{' && body.back() == '}') {
    return parse_triple(body.substr(1, body.size() - 2), body);
  }

  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t bang = body.find('!', start);
    if (bang == std::string_view::npos) {
      fields.push_back(trim(body.substr(start)));
      break;
    }
    fields.push_back(trim(body.substr(start, bang - start)));
    start = bang + 1;
  }

  ColorSpec spec;
  spec.source_text = std::string(body);
  if (!valid_token(fields[0])) {
    throw Error(ErrorKind::Parse, "invalid color token in '" + std::string(body) + "'");
  }
  spec.base = std::string(fields[0]);
  if (fields.size() == 1) {
    spec.kind = ColorSpec::Kind::Named;
    return spec;
  }

  spec.kind = ColorSpec::Kind::Mix;
  std::size_t i = 1;
  while (i < fields.size()) {
    Fraction percent = parse_percent(fields[i], body);
    std::string token = "white";  // trailing "a!30" mixes with white
    if (i + 1 < fields.size()) {
      if (!valid_token(fields[i + 1])) {
        throw Error(ErrorKind::Parse, "invalid color token in '" + std::string(body) + "'");
      }
      token = std::string(fields[i + 1]);
    }
    spec.steps.push_back({percent, std::move(token)});
    i += 2;
  }
  return spec;
}

namespace {

ExactRgb lookup_exact(std::string_view name, const Palette& palette) {
  auto rgb = palette.find(name);
  if (!rgb) throw Error(ErrorKind::UnknownColor, "unknown color '" + std::string(name) + "'");
  return ExactRgb{{Fraction::of(rgb->r), Fraction::of(rgb->g), Fraction::of(rgb->b)}};
}

}  // namespace

ExactRgb mix_channels(const ExactRgb& a, const Fraction& percent, const ExactRgb& b) {
  Fraction p = percent * Fraction::of(1, 100);
  Fraction q = Fraction::of(1) + p * Fraction::of(-1);
  ExactRgb out;
  for (int k = 0; k < 3; ++k) out.channel[k] = p * a.channel[k] + q * b.channel[k];
  return out;
}

ExactRgb resolve_channels(const ColorSpec& spec, const Palette& palette) {
  switch (spec.kind) {
    case ColorSpec::Kind::Triple:
      return ExactRgb{{Fraction::of(spec.triple.r), Fraction::of(spec.triple.g),
                       Fraction::of(spec.triple.b)}};
    case ColorSpec::Kind::Named:
      return lookup_exact(spec.base, palette);
    case ColorSpec::Kind::Mix: {
      ExactRgb current = lookup_exact(spec.base, palette);
      for (const auto& step : spec.steps) {
        current = mix_channels(current, step.percent, lookup_exact(step.token, palette));
      }
      return current;
    }
  }
  throw Error(ErrorKind::Parse, "invalid color spec");
}

Rgb resolve_rgb(const ColorSpec& spec, const Palette& palette) {
  ExactRgb exact = resolve_channels(spec, palette);
  return Rgb{static_cast<int>(exact.channel[0].rounded()),
             static_cast<int>(exact.channel[1].rounded()),
             static_cast<int>(exact.channel[2].rounded())};
}

}  // namespace netfig
