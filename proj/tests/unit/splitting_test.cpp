#include <gtest/gtest.h>

#include <vector>

#include "generators.hpp"
#include "slopekit/error.hpp"
#include "slopekit/io.hpp"
#include "slopekit/splitting.hpp"

using namespace slopekit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a DomainError";
  return ErrorCode::ParseError;
}

std::vector<Int> range(Int lo, Int hi) {
  std::vector<Int> out;
  for (Int s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

}  // namespace

TEST(SplitSpec, Validation) {
  EXPECT_EQ(code_of([] { SplitSpec(Slope(-1), Slope(0), Slope(2)); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(code_of([] { SplitSpec(Slope(-1), Slope::infinity(), Slope(1, 2)); }), ErrorCode::NonIntegerSlope);
  EXPECT_EQ(code_of([] { check_split_slope(SplitSpec::normalized(2), Slope(1, 2)); }), ErrorCode::NonIntegerSlope);
}

TEST(SplitSpec, FromMixedPath) {
  const SplitSpec spec = SplitSpec::from_mixed_path(parse_slice_path("-1,inf,3 ; +-"));
  EXPECT_EQ(spec.s0(), Slope(-1));
  EXPECT_EQ(spec.s2(), Slope(3));
  EXPECT_EQ(code_of([] { SplitSpec::from_mixed_path(parse_slice_path("-1,inf,3 ; ++")); }), ErrorCode::NotMixed);
}

TEST(CheckSplitSlope, Examples) {
  const SplitSpec spec = SplitSpec::normalized(2);
  const auto over = check_split_slope(spec, 3);
  EXPECT_EQ(over.status, Tightness::Overtwisted);
  EXPECT_EQ(over.reason, OvertwistedReason::RotationExceedsPi);
  const auto disk = check_split_slope(spec, 2);
  EXPECT_EQ(disk.status, Tightness::Overtwisted);
  EXPECT_EQ(disk.reason, OvertwistedReason::MeridionalDisk);
  const auto tight = check_split_slope(spec, 0);
  EXPECT_TRUE(tight.tight_candidate());
  EXPECT_FALSE(tight.reason.has_value());
}

TEST(CheckSplitSlope, TieBetweenSidesPrefersMeridionalDisk) {
  const auto v = check_split_slope(SplitSpec::normalized(-2), -1);
  EXPECT_EQ(v.toward_s2, ArcComparison::Greater);
  EXPECT_EQ(v.toward_s0, ArcComparison::Equal);
  EXPECT_EQ(v.reason, OvertwistedReason::MeridionalDisk);
}

TEST(CheckSplitSlope, ReasonStrings) {
  EXPECT_EQ(to_string(OvertwistedReason::RotationExceedsPi), "rotation-exceeds-pi");
  EXPECT_EQ(to_string(OvertwistedReason::MeridionalDisk), "meridional-disk");
}

TEST(SplittingSlopes, Examples) {
  EXPECT_EQ(splitting_slopes(SplitSpec::normalized(1)), (std::vector<Int>{0}));
  EXPECT_EQ(splitting_slopes(SplitSpec::normalized(3)), (std::vector<Int>{0, 1, 2}));
  EXPECT_EQ(splitting_slopes(SplitSpec::normalized(0)), (std::vector<Int>{}));
}

// The range is exactly the set of s passing both checks, found by scanning
// far beyond both ends; the s0 side fails at s = -1 by a meridional disk.
TEST(SplittingSlopes, MatchesExhaustiveScan) {
  for (Int s2 = -3; s2 <= 10; ++s2) {
    const SplitSpec spec = SplitSpec::normalized(s2);
    std::vector<Int> scanned;
    for (Int s = -10; s <= s2 + 10; ++s) {
      if (check_split_slope(spec, s).tight_candidate()) scanned.push_back(s);
    }
    EXPECT_EQ(splitting_slopes(spec), scanned);
    EXPECT_EQ(scanned, s2 > 0 ? range(0, s2 - 1) : std::vector<Int>{});
    EXPECT_EQ(check_split_slope(spec, s2).reason, OvertwistedReason::MeridionalDisk);
    // Read off the s2 side: for s2 = -2 the slope s2 + 1 is also s0, where the
    // other side reports a meridional disk and wins the tie.
    const auto past = check_split_slope(spec, s2 + 1);
    EXPECT_EQ(past.status, Tightness::Overtwisted);
    EXPECT_EQ(reason_for(past.toward_s2), OvertwistedReason::RotationExceedsPi);
    if (s2 != -2) EXPECT_EQ(past.reason, OvertwistedReason::RotationExceedsPi);
    EXPECT_EQ(check_split_slope(spec, -1).reason, OvertwistedReason::MeridionalDisk);
  }
}

// Shifting every integer slope by k (the map fixing inf) relabels verdicts.
TEST(SplittingSlopes, ShiftInvariance) {
  for (Int s2 = -3; s2 <= 8; ++s2) {
    for (Int k = -4; k <= 4; ++k) {
      const SplitSpec base = SplitSpec::normalized(s2);
      const SplitSpec shifted(Slope(-1 + k), Slope::infinity(), Slope(s2 + k));
      for (Int s = -6; s <= s2 + 6; ++s) {
        const auto a = check_split_slope(base, s);
        const auto b = check_split_slope(shifted, s + k);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.reason, b.reason);
      }
      std::vector<Int> expected = splitting_slopes(base);
      for (Int& s : expected) s += k;
      EXPECT_EQ(splitting_slopes(shifted), expected);
    }
  }
}

// Moving all four slopes by an orientation-preserving map leaves the two
// sweeps, and so the verdict, unchanged.
TEST(SplitVerdict, InvariantUnderOrientationPreservingMaps) {
  gen::Engine rng(34);
  for (int i = 0; i < 200; ++i) {
    const GluingMap g = gen::sl2z(rng);
    const Int s2 = gen::uniform(rng, -3, 10);
    const SplitSpec spec = SplitSpec::normalized(s2);
    for (Int s = -5; s <= s2 + 5; ++s) {
      const auto here = check_split_slope(spec, s);
      const auto there = split_verdict(g.apply(spec.s0()), g.apply(spec.s1()), g.apply(spec.s2()), g.apply(Slope(s)));
      EXPECT_EQ(there.status, here.status);
      EXPECT_EQ(there.reason, here.reason);
      EXPECT_EQ(there.toward_s2, here.toward_s2);
      EXPECT_EQ(there.toward_s0, here.toward_s0);
    }
  }
}
