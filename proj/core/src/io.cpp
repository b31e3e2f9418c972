#include "slopekit/io.hpp"

#include <charconv>
#include <vector>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw DomainError(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

Int parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) fail("integer", text);
  return v;
}

Slope parse_slope(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "∞") return Slope::infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_integer(text));
  const Int p = parse_integer(text.substr(0, slash));
  const Int q = parse_integer(text.substr(slash + 1));
  return Slope(p, q);
}

Vec2 parse_vec2(std::string_view text) {
  text = trim(text);
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') fail("class", text);
  const auto parts = split(text.substr(1, text.size() - 2), ',');
  if (parts.size() != 2) fail("class", text);
  return {parse_integer(parts[0]), parse_integer(parts[1])};
}

CurveClass parse_curve_class(std::string_view text) {
  const Vec2 v = parse_vec2(text);
  return CurveClass(v.x, v.y);
}

SlicePath parse_slice_path(std::string_view text) {
  const auto halves = split(text, ';');
  if (halves.size() != 2) fail("slice path (expected 'slopes ; signs')", text);

  std::vector<Slope> slopes;
  for (const auto s : split(halves[0], ',')) slopes.push_back(parse_slope(s));

  std::vector<Sign> signs;
  for (const char c : halves[1]) {
    if (c == '+') {
      signs.push_back(Sign::Plus);
    } else if (c == '-') {
      signs.push_back(Sign::Minus);
    } else if (c != ' ') {
      fail("sign string", halves[1]);
    }
  }
  return SlicePath(std::move(slopes), std::move(signs));
}

std::string to_string(const SlicePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.slopes().size(); ++i) out += (i ? "," : "") + to_string(path.slopes()[i]);
  out += " ; ";
  for (const Sign s : path.signs()) out += sign_char(s);
  return out;
}

std::string to_string(const FareyPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.slopes().size(); ++i) out += (i ? " " : "") + to_string(path.slopes()[i]);
  return out;
}

}  // namespace slopekit
