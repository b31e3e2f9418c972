#pragma once

// Slopes on the projective rational line, primitive curve classes on the
// torus R^2/Z^2, unimodular gluing maps and Farey-graph geodesics.
//
// Conventions used throughout the library:
//   * a curve class (x, y) has slope y/x, so (1,0) has slope 0 and (0,1) is
//     the slope infinity;
//   * the canonical direction of a slope p/q is the class (q, p) with q >= 0,
//     and (0,1) for infinity;
//   * clockwise rotation on the slope circle means decreasing slope, passing
//     from -infinity to +infinity through the point at infinity.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace slopekit {

using Int = std::int64_t;

// An integer vector in Z^2. Used for homology classes that need not be
// primitive and for relative Euler classes.
struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

Vec2 operator+(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a, Vec2 b);
Vec2 operator-(Vec2 a);
Vec2 operator*(Int k, Vec2 a);
Vec2& operator+=(Vec2& a, Vec2 b);

// det(a, b) = a.x*b.y - a.y*b.x
Int det(Vec2 a, Vec2 b);

class Slope;

// A primitive, nonzero class on T^2. Keeps its sign: (1,0) and (-1,0) are
// different classes with the same slope.
class CurveClass {
 public:
  // Throws ZeroVector for (0,0) and NotPrimitive when gcd(|x|,|y|) > 1.
  CurveClass(Int x, Int y);

  // Divides out the gcd, keeping the sign of the input.
  static CurveClass primitive_part(Vec2 v);
  static CurveClass canonical(const Slope& s);

  Int x() const noexcept { return x_; }
  Int y() const noexcept { return y_; }
  Vec2 vec() const noexcept { return {x_, y_}; }
  Slope slope() const;
  CurveClass operator-() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  struct Unchecked {};
  CurveClass(Int x, Int y, Unchecked) noexcept : x_(x), y_(y) {}

  Int x_;
  Int y_;
};

Int det(const CurveClass& a, const CurveClass& b);

// A point p/q of Q u {infinity}. Canonical form: gcd(|p|,q) = 1, q >= 0, and
// infinity is stored as (1,0).
class Slope {
 public:
  // Normalizes (p, q); throws ZeroVector for (0,0).
  Slope(Int p, Int q);
  explicit Slope(Int integer) : p_(integer), q_(1) {}

  static Slope infinity() noexcept { return Slope(1, 0, Unchecked{}); }

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_integer() const noexcept { return q_ == 1; }
  CurveClass direction() const { return CurveClass::canonical(*this); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  struct Unchecked {};
  Slope(Int p, Int q, Unchecked) noexcept : p_(p), q_(q) {}

  Int p_;
  Int q_;
};

// Real-line order on finite slopes, with infinity placed above every finite
// slope. Only meaningful as an order on the affine chart, not on the circle.
std::strong_ordering compare_affine(const Slope& a, const Slope& b);

// Floor of a finite slope. Throws OutOfDomain for infinity.
Int floor(const Slope& s);

Slope normalize_slope(Int p, Int q);

// Integer matrix ((a,b),(c,d)) with determinant +1 or -1.
class GluingMap {
 public:
  // Throws NotUnimodular unless ad - bc = +-1.
  GluingMap(Int a, Int b, Int c, Int d);

  static GluingMap identity() noexcept { return GluingMap(1, 0, 0, 1, Unchecked{}); }
  // Some orientation-preserving map sending the class c to (0,1).
  static GluingMap sending_to_infinity(const CurveClass& c);

  Int a() const noexcept { return a_; }
  Int b() const noexcept { return b_; }
  Int c() const noexcept { return c_; }
  Int d() const noexcept { return d_; }
  Int determinant() const;

  GluingMap inverse() const;
  Vec2 apply(Vec2 v) const;
  CurveClass apply(const CurveClass& v) const;
  Slope apply(const Slope& s) const;

  friend GluingMap operator*(const GluingMap& lhs, const GluingMap& rhs);
  friend bool operator==(const GluingMap&, const GluingMap&) = default;

 private:
  struct Unchecked {};
  GluingMap(Int a, Int b, Int c, Int d, Unchecked) noexcept : a_(a), b_(b), c_(c), d_(d) {}

  Int a_, b_, c_, d_;
};

CurveClass apply_gluing(const GluingMap& g, const CurveClass& c);

// True iff |p_a q_b - p_b q_a| = 1. Throws EqualSlopes when a == b.
bool farey_adjacent(const Slope& a, const Slope& b);

// A chain of pairwise-distinct slopes, consecutive ones Farey-adjacent.
class FareyPath {
 public:
  // Throws NotAdjacent / RepeatedSlope / OutOfDomain (fewer than one slope).
  explicit FareyPath(std::vector<Slope> slopes);

  const std::vector<Slope>& slopes() const noexcept { return slopes_; }
  std::size_t size() const noexcept { return slopes_.size(); }
  // Number of edges.
  std::size_t length() const noexcept { return slopes_.size() - 1; }
  const Slope& front() const { return slopes_.front(); }
  const Slope& back() const { return slopes_.back(); }

  friend bool operator==(const FareyPath&, const FareyPath&) = default;

 private:
  std::vector<Slope> slopes_;
};

// Shortest edge path from a to b in the Farey graph. Shortest paths are not
// unique in general (0 -> 2 goes through 1 or through infinity); among all
// shortest paths this returns the one whose vertices, read in order, come
// first in counterclockwise order starting from a.
// Throws EqualSlopes when a == b.
FareyPath farey_path(const Slope& a, const Slope& b);

enum class Orientation { Clockwise, CounterClockwise };
enum class ArcComparison { Less, Equal, Greater };

// Total angle swept by the concatenated arcs path[0] -> path[1] -> ... on the
// slope circle (each leg traversed in the given orientation, each leg in
// (0, pi)), compared against pi. Exact; decided by 2x2 determinant signs.
// Throws DegenerateLeg if consecutive slopes coincide and OutOfDomain for
// paths with fewer than two slopes.
ArcComparison compare_arc_measure_to_pi(std::span<const Slope> path, Orientation orientation);

std::string to_string(const Slope& s);
std::string to_string(const CurveClass& c);
std::string to_string(Vec2 v);
std::string to_string(ArcComparison c);
std::string to_string(Orientation o);

std::ostream& operator<<(std::ostream& os, const Slope& s);
std::ostream& operator<<(std::ostream& os, const CurveClass& c);
std::ostream& operator<<(std::ostream& os, Vec2 v);

}  // namespace slopekit
