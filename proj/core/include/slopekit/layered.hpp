#pragma once

// Layered T^2 x I structures built from basic slices: relative Euler
// classes, universal tightness, mixed tori, and tight structures on solid
// tori via negative continued fractions.

#include <cstddef>
#include <vector>

#include "slopekit/slope.hpp"

namespace slopekit {

enum class Sign { Plus, Minus };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

// Relative Euler classes live in H_1(T^2) ~ Z^2 after Poincare duality.
using EulerClass = Vec2;

class BasicSlice {
 public:
  // Throws NotAdjacent (or EqualSlopes) unless front and back are Farey neighbours.
  BasicSlice(Slope front, Slope back, Sign sign);

  const Slope& front() const noexcept { return front_; }
  const Slope& back() const noexcept { return back_; }
  Sign sign() const noexcept { return sign_; }

  friend bool operator==(const BasicSlice&, const BasicSlice&) = default;

 private:
  Slope front_;
  Slope back_;
  Sign sign_;
};

// A stack of basic slices T^2 x [0,1] u T^2 x [1,2] u ...
class SlicePath {
 public:
  // slopes.size() == signs.size() + 1 >= 2; slopes form a FareyPath.
  SlicePath(std::vector<Slope> slopes, std::vector<Sign> signs);

  const FareyPath& chain() const noexcept { return chain_; }
  const std::vector<Slope>& slopes() const noexcept { return chain_.slopes(); }
  const std::vector<Sign>& signs() const noexcept { return signs_; }
  std::size_t slice_count() const noexcept { return signs_.size(); }
  BasicSlice slice(std::size_t i) const;

  // Same slopes, every sign flipped.
  SlicePath negated() const;

  friend bool operator==(const SlicePath&, const SlicePath&) = default;

 private:
  FareyPath chain_;
  std::vector<Sign> signs_;
};

// Stacks b on top of a; a.slopes().back() must equal b.slopes().front().
SlicePath concatenate(const SlicePath& a, const SlicePath& b);

// sign * (v_back - v_front), where v_front is the canonical direction of the
// front slope and v_back the primitive vector of the back slope with
// det(v_front, v_back) = +1.
EulerClass slice_euler_contribution(const BasicSlice& slice);

// Primitive vectors w_0, ..., w_k along the slope chain: w_0 canonical and
// det(w_i, w_{i+1}) = +1.
std::vector<CurveClass> chain_representatives(const SlicePath& path);

// Per-slice contributions sign_i * (w_{i+1} - w_i) using chain_representatives.
std::vector<EulerClass> slice_contributions(const SlicePath& path);

EulerClass relative_euler_class(const SlicePath& path);

// True iff every slice carries the same sign.
bool is_universally_tight(const SlicePath& path);

// True iff the slices on either side of interface i have opposite signs.
// Throws BoundaryInterface unless 1 <= i <= slice_count() - 1.
bool is_mixed_torus(const SlicePath& path, std::size_t interface);

// Coefficients r_0, ..., r_k, all <= -2, with
// s = r_0 - 1/(r_1 - 1/(... - 1/r_k)). Returns {} for s = -1.
// Throws OutOfDomain unless s is finite and s <= -1.
std::vector<Int> negative_continued_fraction(const Slope& s);

// Number of tight contact structures on the solid torus with two boundary
// dividing curves of slope s (meridian slope 0): |(r_0+1)...(r_{k-1}+1) r_k|,
// and 1 for s = -1.
// Throws OutOfDomain unless s is finite and s <= -1.
Int count_tight_solid_torus(const Slope& boundary_slope);

}  // namespace slopekit
