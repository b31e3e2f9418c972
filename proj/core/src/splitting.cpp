#include "slopekit/splitting.hpp"

#include <algorithm>
#include <array>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

void require_integer(const Slope& s, const char* what) {
  if (!s.is_integer()) {
    throw DomainError(ErrorCode::NonIntegerSlope, std::string(what) + " must be an integer slope, got " + to_string(s));
  }
}

}  // namespace

SplitSpec::SplitSpec(Slope s0, Slope s1, Slope s2) : s0_(s0), s1_(s1), s2_(s2) {
  if (!s1_.is_infinite()) {
    throw DomainError(ErrorCode::OutOfDomain, "mixed torus slope s1 must be inf, got " + to_string(s1_));
  }
  require_integer(s0_, "s0");
  require_integer(s2_, "s2");
}

SplitSpec SplitSpec::normalized(Int s2) { return SplitSpec(Slope(-1), Slope::infinity(), Slope(s2)); }

SplitSpec SplitSpec::from_mixed_path(const SlicePath& path) {
  if (path.slice_count() != 2) {
    throw DomainError(ErrorCode::OutOfDomain, "mixed torus model needs exactly two basic slices");
  }
  if (!is_mixed_torus(path, 1)) throw DomainError(ErrorCode::NotMixed, "both basic slices carry the same sign");
  return SplitSpec(path.slopes()[0], path.slopes()[1], path.slopes()[2]);
}

SplitVerdict split_verdict(const Slope& s0, const Slope& s1, const Slope& s2, const Slope& s) {
  const std::array<Slope, 3> toward_s2{s, s1, s2};
  const std::array<Slope, 3> toward_s0{s, s1, s0};
  const std::array<ArcComparison, 2> sweeps{
      compare_arc_measure_to_pi(toward_s2, Orientation::Clockwise),
      compare_arc_measure_to_pi(toward_s0, Orientation::CounterClockwise),
  };

  SplitVerdict verdict{s, Tightness::TightCandidate, std::nullopt, sweeps[0], sweeps[1]};
  const auto any = [&](ArcComparison c) { return std::find(sweeps.begin(), sweeps.end(), c) != sweeps.end(); };
  if (any(ArcComparison::Equal)) {
    verdict.status = Tightness::Overtwisted;
    verdict.reason = OvertwistedReason::MeridionalDisk;
  } else if (any(ArcComparison::Greater)) {
    verdict.status = Tightness::Overtwisted;
    verdict.reason = OvertwistedReason::RotationExceedsPi;
  }
  return verdict;
}

SplitVerdict check_split_slope(const SplitSpec& spec, const Slope& s) {
  require_integer(s, "splitting slope");
  return split_verdict(spec.s0(), spec.s1(), spec.s2(), s);
}

SplitVerdict check_split_slope(const SplitSpec& spec, Int s) { return check_split_slope(spec, Slope(s)); }

std::optional<OvertwistedReason> reason_for(ArcComparison sweep) {
  switch (sweep) {
    case ArcComparison::Equal:
      return OvertwistedReason::MeridionalDisk;
    case ArcComparison::Greater:
      return OvertwistedReason::RotationExceedsPi;
    case ArcComparison::Less:
      break;
  }
  return std::nullopt;
}

std::vector<Int> splitting_slopes(const SplitSpec& spec) {
  // Outside [min(s0,s2), max(s0,s2)] one of the two sweeps always exceeds pi,
  // so scanning that window and filtering by the predicate is exhaustive.
  const Int lo = std::min(spec.s0().p(), spec.s2().p());
  const Int hi = std::max(spec.s0().p(), spec.s2().p());
  std::vector<Int> out;
  for (Int s = lo; s <= hi; ++s) {
    if (check_split_slope(spec, s).tight_candidate()) out.push_back(s);
  }
  return out;
}

std::string to_string(Tightness t) { return t == Tightness::TightCandidate ? "tight-candidate" : "overtwisted"; }

std::string to_string(OvertwistedReason r) {
  return r == OvertwistedReason::RotationExceedsPi ? "rotation-exceeds-pi" : "meridional-disk";
}

}  // namespace slopekit
