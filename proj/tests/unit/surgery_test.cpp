#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "generators.hpp"
#include "slopekit/error.hpp"
#include "slopekit/surgery.hpp"

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

const SlopeFixture& fixture(const std::vector<SlopeFixture>& table, const std::string& key) {
  for (const auto& f : table) {
    if (f.key == key) return f;
  }
  throw std::runtime_error("missing fixture " + key);
}

}  // namespace

TEST(Stabilize, InvariantsAndDividingSlope) {
  const auto l = LegendrianModel::standard(-1, 0);
  const auto plus = stabilize(l, Sign::Plus);
  EXPECT_EQ(plus.tb(), -2);
  EXPECT_EQ(plus.rot(), 1);
  const auto both = stabilize(plus, Sign::Minus);
  EXPECT_EQ(both.tb(), -3);
  EXPECT_EQ(both.rot(), 0);
  EXPECT_EQ(plus.dividing().slope(), Slope(-1));
  EXPECT_EQ(stabilize(l, Sign::Minus).dividing().slope(), Slope(-1));
}

TEST(Stabilize, Commutes) {
  gen::Engine rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto l = LegendrianModel::standard(gen::uniform(rng, -10, 5), gen::uniform(rng, -5, 5));
    const auto pm = stabilize(stabilize(l, Sign::Plus), Sign::Minus);
    const auto mp = stabilize(stabilize(l, Sign::Minus), Sign::Plus);
    EXPECT_EQ(pm.tb(), mp.tb());
    EXPECT_EQ(pm.rot(), mp.rot());
    EXPECT_EQ(pm.dividing().slope(), mp.dividing().slope());
  }
}

TEST(LegendrianModel, RejectsNonUnimodularFrame) {
  EXPECT_EQ(code_of([] { LegendrianModel(0, 0, CurveClass(1, 0), CurveClass(1, 2)); }),
            ErrorCode::NonUnimodularFrame);
  const LegendrianModel l(0, 0, CurveClass(1, 1), CurveClass(0, 1));
  EXPECT_EQ(l.reframed().meridian(), CurveClass(1, 0));
  EXPECT_EQ(l.reframed().dividing(), CurveClass(0, 1));
}

TEST(SurgeryGluingMap, Matrices) {
  EXPECT_EQ(surgery_gluing_map(Sign::Minus), GluingMap(1, 0, -1, 1));
  EXPECT_EQ(surgery_gluing_map(Sign::Plus), GluingMap(1, 0, 1, 1));
  EXPECT_EQ(surgery_gluing_map(Sign::Minus).determinant(), 1);
  EXPECT_EQ(surgery_gluing_map(Sign::Plus).determinant(), 1);
}

TEST(ContactSurgeryMeridian, Examples) {
  EXPECT_EQ(contact_surgery_meridian(CurveClass(-1, 1), CurveClass(1, 0), Sign::Minus), CurveClass(-2, 1));
  EXPECT_EQ(contact_surgery_meridian(CurveClass(-1, 1), CurveClass(1, 0), Sign::Minus).slope(), Slope(-1, 2));
  EXPECT_EQ(contact_surgery_meridian(CurveClass(0, 1), CurveClass(1, 0), Sign::Minus), CurveClass(-1, 1));
  EXPECT_EQ(contact_surgery_meridian(CurveClass(-1, 1), CurveClass(1, 0), Sign::Plus), CurveClass(0, 1));
}

TEST(ContactSurgeryMeridian, AdjacentToBothAndInvertible) {
  gen::Engine rng(32);
  for (int i = 0; i < 300; ++i) {
    const GluingMap g = gen::sl2z(rng);
    const CurveClass mu = apply_gluing(g, CurveClass(1, 0));
    const CurveClass d = apply_gluing(g, CurveClass(0, 1));
    const CurveClass m = contact_surgery_meridian(d, mu, Sign::Minus);
    EXPECT_EQ(std::llabs(det(m, d)), 1);
    EXPECT_EQ(std::llabs(det(m, mu)), 1);
    // In the frame (mu, d) the new meridian is d - mu = (-1,1), and undoing
    // phi_- on it recovers the old meridian up to orientation.
    const CurveClass local = apply_gluing(g.inverse(), m);
    EXPECT_EQ(local, CurveClass(-1, 1));
    EXPECT_EQ(apply_gluing(surgery_gluing_map(Sign::Minus).inverse(), -local), CurveClass(1, 0));
  }
}

TEST(SlopeTable, FixturesRegenerate) {
  const auto table = theorem2_slope_table();
  EXPECT_EQ(fixture(table, "gamma_L").slope, Slope(1));
  EXPECT_EQ(fixture(table, "gamma_S+S-L").slope, Slope(-1));
  EXPECT_EQ(fixture(table, "meridian_V1").slope, Slope(-1, 2));
  EXPECT_EQ(fixture(table, "meridian_V1").curve, CurveClass(-2, 1));
  EXPECT_EQ(fixture(table, "gamma_S-L").slope, Slope::infinity());
  EXPECT_EQ(fixture(table, "meridian_S-L").slope, Slope(0));
  for (const auto& f : table) EXPECT_EQ(f.curve.slope(), f.slope) << f.key;
}

TEST(ClassifyMeridian, Examples) {
  const auto zero = classify_meridian(0);
  EXPECT_TRUE(zero.m1.tight_candidate());
  EXPECT_TRUE(zero.m2.tight_candidate());
  ASSERT_TRUE(zero.identification.has_value());
  EXPECT_EQ(zero.identification->first, "(S^3, xi_std)");
  EXPECT_EQ(zero.identification->second, "(M, xi)");
  EXPECT_EQ(zero.meridian, CurveClass(1, 0));

  EXPECT_EQ(classify_meridian(-1).m1.status, Tightness::Overtwisted);
  EXPECT_EQ(classify_meridian(2).m2.status, Tightness::Overtwisted);
  EXPECT_EQ(classify_meridian(2).m2.reason, OvertwistedReason::RotationExceedsPi);
  EXPECT_EQ(classify_meridian(1).m2.reason, OvertwistedReason::MeridionalDisk);
  EXPECT_FALSE(classify_meridian(1).identification.has_value());
}

TEST(MeridianTable, Pattern) {
  const auto rows = table1(-2, 2);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.meridian, CurveClass(1, r.m));
    EXPECT_EQ(r.m1.tight_candidate(), r.m >= 0) << r.m;
    EXPECT_EQ(r.m2.tight_candidate(), r.m <= 0) << r.m;
  }
  const auto single = table1(0, 0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].identification.has_value());
  EXPECT_EQ(table1(5, 5)[0].m2.status, Tightness::Overtwisted);
  EXPECT_EQ(code_of([] { table1(1, 0); }), ErrorCode::OutOfDomain);
}

TEST(MeridianTable, UniqueTightRowInEveryWindow) {
  for (Int lo = -6; lo <= 0; ++lo) {
    for (Int hi = 0; hi <= 6; ++hi) {
      int tight = 0;
      for (const auto& r : table1(lo, hi)) tight += r.identification.has_value() ? 1 : 0;
      EXPECT_EQ(tight, 1);
    }
  }
}

TEST(MeridianTable, TextLayout) {
  const auto lines = render_table1(table1(-2, 2));
  const std::vector<std::string> expected = {
      "meridian | M1            | M2",
      "---------+---------------+--------",
      "(1,2)    |               | X",
      "(1,1)    |               | X",
      "(1,0)    | (S^3, xi_std) | (M, xi)",
      "(1,-1)   | X             |",
      "(1,-2)   | X             |",
  };
  EXPECT_EQ(lines, expected);
}

// Moving every class of the construction by one orientation-preserving map
// and re-running gives the same pattern.
TEST(ClassifyMeridian, StableUnderGlobalChangeOfCoordinates) {
  gen::Engine rng(33);
  const auto frame = MeridianFrame::from_fixtures();
  for (int i = 0; i < 100; ++i) {
    const GluingMap g = gen::sl2z(rng);
    const auto moved = frame.transformed(g);
    for (Int m = -4; m <= 4; ++m) {
      const auto a = classify_meridian(frame, m);
      const auto b = classify_meridian(moved, m);
      EXPECT_EQ(a.m1, b.m1);
      EXPECT_EQ(a.m2, b.m2);
      EXPECT_EQ(b.meridian, apply_gluing(g, a.meridian));
    }
  }
}
