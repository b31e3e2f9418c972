#pragma once

// Text grammars shared by every module and the CLI:
//   slope       "p/q" | "p" | "inf"
//   curve class "(x,y)"
//   slice path  "s0,s1,...,sk ; +-..."   (one sign per slice)

#include <string>
#include <string_view>

#include "slopekit/layered.hpp"
#include "slopekit/slope.hpp"

namespace slopekit {

// All parsers throw DomainError(ParseError) on malformed input; semantic
// failures (zero vector, non-adjacent slopes) keep their own codes.
Slope parse_slope(std::string_view text);
Vec2 parse_vec2(std::string_view text);
CurveClass parse_curve_class(std::string_view text);
Int parse_integer(std::string_view text);
SlicePath parse_slice_path(std::string_view text);

std::string to_string(const SlicePath& path);
std::string to_string(const FareyPath& path);

}  // namespace slopekit
