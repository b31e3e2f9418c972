#include "slopekit/slope.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <tuple>

#include "slopekit/detail/checked.hpp"

namespace slopekit {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_neg;
using detail::checked_sub;

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::EqualSlopes: return "EqualSlopes";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::RepeatedSlope: return "RepeatedSlope";
    case ErrorCode::DegenerateLeg: return "DegenerateLeg";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::BoundaryInterface: return "BoundaryInterface";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonIntegerSlope: return "NonIntegerSlope";
    case ErrorCode::NotMixed: return "NotMixed";
    case ErrorCode::NonUnimodularFrame: return "NonUnimodularFrame";
    case ErrorCode::UnknownOrbit: return "UnknownOrbit";
    case ErrorCode::UnboundedSearch: return "UnboundedSearch";
    case ErrorCode::InconsistentConstraints: return "InconsistentConstraints";
    case ErrorCode::UnsupportedFraming: return "UnsupportedFraming";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Vec2

Vec2 operator+(Vec2 a, Vec2 b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }
Vec2 operator-(Vec2 a) { return {checked_neg(a.x), checked_neg(a.y)}; }
Vec2 operator*(Int k, Vec2 a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }
Vec2& operator+=(Vec2& a, Vec2 b) { return a = a + b; }

Int det(Vec2 a, Vec2 b) { return detail::det2(a.x, a.y, b.x, b.y); }

// ---------------------------------------------------------------------------
// CurveClass

CurveClass::CurveClass(Int x, Int y) : x_(x), y_(y) {
  if (x == 0 && y == 0) throw DomainError(ErrorCode::ZeroVector, "curve class (0,0)");
  if (detail::abs_gcd(x, y) != 1) {
    throw DomainError(ErrorCode::NotPrimitive, "curve class " + to_string(Vec2{x, y}) + " is not primitive");
  }
}

CurveClass CurveClass::primitive_part(Vec2 v) {
  if (v.x == 0 && v.y == 0) throw DomainError(ErrorCode::ZeroVector, "curve class (0,0)");
  const Int g = detail::abs_gcd(v.x, v.y);
  return CurveClass(v.x / g, v.y / g, Unchecked{});
}

CurveClass CurveClass::canonical(const Slope& s) { return CurveClass(s.q(), s.p(), Unchecked{}); }

Slope CurveClass::slope() const { return Slope(y_, x_); }

CurveClass CurveClass::operator-() const { return CurveClass(checked_neg(x_), checked_neg(y_), Unchecked{}); }

Int det(const CurveClass& a, const CurveClass& b) { return det(a.vec(), b.vec()); }

// ---------------------------------------------------------------------------
// Slope

Slope::Slope(Int p, Int q) {
  if (p == 0 && q == 0) throw DomainError(ErrorCode::ZeroVector, "slope 0/0");
  const Int g = detail::abs_gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = checked_neg(p);
    q = checked_neg(q);
  }
  p_ = p;
  q_ = q;
}

Slope normalize_slope(Int p, Int q) { return Slope(p, q); }

std::strong_ordering compare_affine(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  // a.p/a.q vs b.p/b.q with positive denominators.
  const int s = detail::det2_sign(a.p(), b.p(), a.q(), b.q());
  return s <=> 0;
}

Int floor(const Slope& s) {
  if (s.is_infinite()) throw DomainError(ErrorCode::OutOfDomain, "floor of infinity");
  return detail::floor_div(s.p(), s.q());
}

// ---------------------------------------------------------------------------
// GluingMap

namespace {

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, checked_sub(old_r, checked_mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, checked_sub(old_s, checked_mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, checked_sub(old_t, checked_mul(q, t)));
  }
  if (old_r < 0) return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
  return {old_r, old_s, old_t};
}

}  // namespace

GluingMap::GluingMap(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1 && det != -1) {
    throw DomainError(ErrorCode::NotUnimodular, "gluing map has determinant other than +-1");
  }
}

Int GluingMap::determinant() const { return detail::det2(a_, b_, c_, d_); }

GluingMap GluingMap::sending_to_infinity(const CurveClass& c) {
  const auto [g, s, t] = extended_gcd(c.x(), c.y());
  // ((y, -x), (s, t)) * (x, y) = (0, s x + t y) = (0, 1); det = t y + s x = 1.
  return GluingMap(c.y(), checked_neg(c.x()), s, t, Unchecked{});
}

GluingMap GluingMap::inverse() const {
  const Int e = determinant();
  return GluingMap(checked_mul(e, d_), checked_mul(e, checked_neg(b_)), checked_mul(e, checked_neg(c_)),
                   checked_mul(e, a_), Unchecked{});
}

Vec2 GluingMap::apply(Vec2 v) const {
  return {checked_add(checked_mul(a_, v.x), checked_mul(b_, v.y)),
          checked_add(checked_mul(c_, v.x), checked_mul(d_, v.y))};
}

CurveClass GluingMap::apply(const CurveClass& v) const {
  // Unimodular maps send primitive vectors to primitive vectors.
  return CurveClass::primitive_part(apply(v.vec()));
}

Slope GluingMap::apply(const Slope& s) const { return apply(s.direction()).slope(); }

GluingMap operator*(const GluingMap& l, const GluingMap& r) {
  return GluingMap(checked_add(checked_mul(l.a_, r.a_), checked_mul(l.b_, r.c_)),
                   checked_add(checked_mul(l.a_, r.b_), checked_mul(l.b_, r.d_)),
                   checked_add(checked_mul(l.c_, r.a_), checked_mul(l.d_, r.c_)),
                   checked_add(checked_mul(l.c_, r.b_), checked_mul(l.d_, r.d_)), GluingMap::Unchecked{});
}

CurveClass apply_gluing(const GluingMap& g, const CurveClass& c) { return g.apply(c); }

// ---------------------------------------------------------------------------
// Farey graph

bool farey_adjacent(const Slope& a, const Slope& b) {
  if (a == b) throw DomainError(ErrorCode::EqualSlopes, "farey_adjacent(" + to_string(a) + ", " + to_string(a) + ")");
  const __int128 d = static_cast<__int128>(a.p()) * b.q() - static_cast<__int128>(b.p()) * a.q();
  return d == 1 || d == -1;
}

FareyPath::FareyPath(std::vector<Slope> slopes) : slopes_(std::move(slopes)) {
  if (slopes_.empty()) throw DomainError(ErrorCode::OutOfDomain, "empty Farey path");
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (slopes_[i] == slopes_[j]) {
        throw DomainError(ErrorCode::RepeatedSlope, "slope " + to_string(slopes_[i]) + " repeats in path");
      }
    }
    if (i > 0 && !farey_adjacent(slopes_[i - 1], slopes_[i])) {
      throw DomainError(ErrorCode::NotAdjacent,
                        to_string(slopes_[i - 1]) + " and " + to_string(slopes_[i]) + " are not Farey neighbours");
    }
  }
}

namespace {

// Upper limit on the number of ladder vertices (the sum of the continued
// fraction partial quotients of the target in the normalized frame).
constexpr std::size_t kMaxLadderVertices = std::size_t{1} << 22;

}  // namespace

FareyPath farey_path(const Slope& a, const Slope& b) {
  if (a == b) throw DomainError(ErrorCode::EqualSlopes, "farey_path(" + to_string(a) + ", " + to_string(a) + ")");

  // Move a to infinity with an orientation-preserving map. Counterclockwise
  // order starting at infinity is the ordinary order of the real line, so the
  // tie-break below reduces to "smallest finite slope first".
  const GluingMap to_inf = GluingMap::sending_to_infinity(a.direction());
  const Slope target = to_inf.apply(b);

  // Vertices of the Farey triangles crossed by the hyperbolic geodesic from
  // infinity to target. Every Farey geodesic between the endpoints lives on
  // these vertices, and the only Farey edges among them are triangle edges.
  std::vector<Slope> vertices{Slope::infinity()};
  std::vector<std::vector<std::size_t>> adjacent(1);
  auto add_vertex = [&](const Slope& s) {
    if (vertices.size() >= kMaxLadderVertices) {
      throw DomainError(ErrorCode::OutOfDomain, "Farey path search exceeds vertex limit");
    }
    vertices.push_back(s);
    adjacent.emplace_back();
    return vertices.size() - 1;
  };
  auto add_edge = [&](std::size_t u, std::size_t v) {
    adjacent[u].push_back(v);
    adjacent[v].push_back(u);
  };

  std::size_t target_index = 0;
  if (target.is_integer()) {
    target_index = add_vertex(target);
    add_edge(0, target_index);
  } else {
    const Int n = floor(target);
    Int lo_p = n, lo_q = 1, hi_p = checked_add(n, 1), hi_q = 1;
    std::size_t lo = add_vertex(Slope(lo_p));
    std::size_t hi = add_vertex(Slope(hi_p));
    add_edge(0, lo);
    add_edge(0, hi);
    add_edge(lo, hi);
    for (;;) {
      const Int mp = checked_add(lo_p, hi_p);
      const Int mq = checked_add(lo_q, hi_q);
      const Slope mediant(mp, mq);
      const std::size_t m = add_vertex(mediant);
      add_edge(m, lo);
      add_edge(m, hi);
      if (mediant == target) {
        target_index = m;
        break;
      }
      if (compare_affine(target, mediant) < 0) {
        hi = m;
        hi_p = mp;
        hi_q = mq;
      } else {
        lo = m;
        lo_p = mp;
        lo_q = mq;
      }
    }
  }

  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(vertices.size(), kUnseen);
  std::deque<std::size_t> queue{target_index};
  dist[target_index] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const std::size_t v : adjacent[u]) {
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }

  const GluingMap back = to_inf.inverse();
  std::vector<Slope> path{a};
  std::size_t current = 0;
  while (current != target_index) {
    std::size_t next = kUnseen;
    for (const std::size_t v : adjacent[current]) {
      if (dist[v] + 1 != dist[current]) continue;
      if (next == kUnseen || compare_affine(vertices[v], vertices[next]) < 0) next = v;
    }
    current = next;
    path.push_back(current == target_index ? b : back.apply(vertices[current]));
  }
  return FareyPath(std::move(path));
}

// ---------------------------------------------------------------------------
// Rotation arcs

namespace {

// Representative of the line through the canonical direction of s with angle
// in [0, pi): y > 0, or y == 0 and x > 0.
Vec2 upper_direction(const Slope& s) {
  const Vec2 v{s.q(), s.p()};
  if (v.y < 0) return {-v.x, -v.y};
  if (v.y == 0) return {1, 0};
  return v;
}

// Sign of theta(u) - theta(v) for u, v in the upper half-plane chart.
int angle_compare(Vec2 u, Vec2 v) {
  // theta(u) < theta(v) iff det(u, v) > 0.
  return -detail::det2_sign(u.x, u.y, v.x, v.y);
}

}  // namespace

ArcComparison compare_arc_measure_to_pi(std::span<const Slope> path, Orientation orientation) {
  if (path.size() < 2) throw DomainError(ErrorCode::OutOfDomain, "rotation path needs at least two slopes");

  // Lift the swept angle as theta_first - theta_last + pi * wraps (clockwise)
  // or theta_last - theta_first + pi * wraps (counterclockwise), where a leg
  // wraps when it crosses the direction of slope 0.
  int wraps = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1]) {
      throw DomainError(ErrorCode::DegenerateLeg, "leg " + to_string(path[i]) + " -> " + to_string(path[i + 1]));
    }
    const int c = angle_compare(upper_direction(path[i + 1]), upper_direction(path[i]));
    if ((orientation == Orientation::Clockwise && c > 0) || (orientation == Orientation::CounterClockwise && c < 0)) {
      ++wraps;
    }
  }
  if (wraps == 0) return ArcComparison::Less;
  if (wraps >= 2) return ArcComparison::Greater;

  int c = angle_compare(upper_direction(path.front()), upper_direction(path.back()));
  if (orientation == Orientation::CounterClockwise) c = -c;
  if (c > 0) return ArcComparison::Greater;
  if (c == 0) return ArcComparison::Equal;
  return ArcComparison::Less;
}

// ---------------------------------------------------------------------------
// Formatting

std::string to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  if (s.is_integer()) return std::to_string(s.p());
  return std::to_string(s.p()) + "/" + std::to_string(s.q());
}

std::string to_string(const CurveClass& c) { return to_string(c.vec()); }

std::string to_string(Vec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

std::string to_string(ArcComparison c) {
  switch (c) {
    case ArcComparison::Less: return "less";
    case ArcComparison::Equal: return "equal";
    case ArcComparison::Greater: return "greater";
  }
  return "?";
}

std::string to_string(Orientation o) { return o == Orientation::Clockwise ? "cw" : "ccw"; }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const CurveClass& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, Vec2 v) { return os << to_string(v); }

}  // namespace slopekit
