#pragma once

// Splitting a contact manifold along a mixed torus: which integer meridian
// slopes s for the two new solid tori can possibly give a tight result.
//
// Model: the mixed torus T^2 x [0,2] has dividing slopes s0, s1 = inf, s2,
// normalized so that s0 = -1. The contact planes rotate clockwise from s
// through inf to s2 on one side, and counterclockwise from s through inf to
// s0 on the other.

#include <optional>
#include <string>
#include <vector>

#include "slopekit/layered.hpp"
#include "slopekit/slope.hpp"

namespace slopekit {

class SplitSpec {
 public:
  // Requires s1 = inf and integer s0, s2. Throws OutOfDomain / NonIntegerSlope.
  SplitSpec(Slope s0, Slope s1, Slope s2);

  // s0 = -1, s1 = inf.
  static SplitSpec normalized(Int s2);

  // From a two-slice path (s0, inf, s2) whose middle torus is mixed.
  // Throws NotMixed if both slices carry the same sign.
  static SplitSpec from_mixed_path(const SlicePath& path);

  const Slope& s0() const noexcept { return s0_; }
  const Slope& s1() const noexcept { return s1_; }
  const Slope& s2() const noexcept { return s2_; }

 private:
  Slope s0_;
  Slope s1_;
  Slope s2_;
};

enum class Tightness { TightCandidate, Overtwisted };
enum class OvertwistedReason { RotationExceedsPi, MeridionalDisk };

struct SplitVerdict {
  Slope slope;
  Tightness status = Tightness::TightCandidate;
  std::optional<OvertwistedReason> reason;
  // The two sweeps behind the verdict: clockwise over [s, inf, s2] and
  // counterclockwise over [s, inf, s0], each compared against pi.
  ArcComparison toward_s2 = ArcComparison::Less;
  ArcComparison toward_s0 = ArcComparison::Less;

  bool tight_candidate() const noexcept { return status == Tightness::TightCandidate; }
  friend bool operator==(const SplitVerdict&, const SplitVerdict&) = default;
};

// Runs the clockwise check over [s, inf, s2] and the counterclockwise check
// over [s, inf, s0]. A sweep of exactly pi (meridional disk) is reported in
// preference to a sweep beyond pi when both sides fail.
// Throws NonIntegerSlope unless s is an integer.
SplitVerdict check_split_slope(const SplitSpec& spec, const Slope& s);
SplitVerdict check_split_slope(const SplitSpec& spec, Int s);

// The same two sweeps with the boundary slopes in arbitrary position, e.g.
// after a change of coordinates moved s1 away from inf. No integrality
// requirement; s must differ from s1. check_split_slope(spec, s) equals
// split_verdict(spec.s0(), spec.s1(), spec.s2(), s).
SplitVerdict split_verdict(const Slope& s0, const Slope& s1, const Slope& s2, const Slope& s);

// All integers s with a TightCandidate verdict, ascending. For the normalized
// model this is {0, ..., s2 - 1}, empty when s2 <= 0.
std::vector<Int> splitting_slopes(const SplitSpec& spec);

// Reason a single sweep certifies on its own, if any.
std::optional<OvertwistedReason> reason_for(ArcComparison sweep);

std::string to_string(Tightness t);
std::string to_string(OvertwistedReason r);

}  // namespace slopekit
