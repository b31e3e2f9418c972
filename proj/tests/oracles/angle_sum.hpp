#pragma once

// Floating-point reference for the arc comparison: add up the angle of each
// leg on the slope circle with atan2 in long double. Only trusted when the
// total is well away from pi; exact ties are tested separately.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// Slopes as (p, q), q == 0 for infinity. Returns the total swept angle in
// units of the slope circle (a full turn of the circle is pi, because the
// direction v and -v give the same slope).
inline long double swept_angle(const std::vector<std::pair<std::int64_t, std::int64_t>>& path, bool clockwise) {
  const long double pi = std::acos(-1.0L);
  auto angle = [&](std::pair<std::int64_t, std::int64_t> s) {
    // direction (q, p), folded into [0, pi)
    long double t = std::atan2(static_cast<long double>(s.first), static_cast<long double>(s.second));
    if (t < 0) t += pi;
    if (t >= pi) t -= pi;
    return t;
  };
  long double total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    long double d = angle(path[i + 1]) - angle(path[i]);
    if (clockwise) d = -d;
    while (d <= 0) d += pi;
    while (d > pi) d -= pi;
    total += d;
  }
  return total;
}

}  // namespace oracle
