#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "angle_sum.hpp"
#include "farey_bfs.hpp"
#include "generators.hpp"
#include "slopekit/error.hpp"
#include "slopekit/io.hpp"
#include "slopekit/slope.hpp"

using namespace slopekit;

namespace {

Slope S(const char* text) { return parse_slope(text); }

std::vector<Slope> slopes(std::initializer_list<const char*> texts) {
  std::vector<Slope> out;
  for (const char* t : texts) out.push_back(S(t));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a DomainError";
  return ErrorCode::ParseError;
}

oracle::Frac frac(const Slope& s) { return oracle::make_frac(s.p(), s.q()); }

}  // namespace

TEST(Slope, NormalizesToCanonicalForm) {
  EXPECT_EQ(normalize_slope(2, 4), Slope(1, 2));
  EXPECT_EQ(normalize_slope(-3, -6), Slope(1, 2));
  EXPECT_EQ(normalize_slope(5, 0), Slope::infinity());
  EXPECT_EQ(normalize_slope(-5, 0), Slope::infinity());
  EXPECT_EQ(Slope(3, -6).p(), -1);
  EXPECT_EQ(Slope(3, -6).q(), 2);
  EXPECT_EQ(Slope(0, -7), Slope(0));
}

TEST(Slope, RejectsZeroVector) {
  EXPECT_EQ(code_of([] { Slope(0, 0); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([] { CurveClass(0, 0); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([] { CurveClass(2, 4); }), ErrorCode::NotPrimitive);
}

TEST(Slope, NormalizationIsIdempotentAndProjective) {
  gen::Engine rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto p = gen::uniform(rng, -50, 50);
    const auto q = gen::uniform(rng, -50, 50);
    if (p == 0 && q == 0) continue;
    const auto k = gen::uniform(rng, 1, 9) * (gen::uniform(rng, 0, 1) ? 1 : -1);
    const Slope s = normalize_slope(p, q);
    EXPECT_EQ(normalize_slope(s.p(), s.q()), s);
    EXPECT_EQ(normalize_slope(k * p, k * q), s);
  }
}

TEST(Slope, CurveClassSlopeUsesYOverX) {
  EXPECT_EQ(CurveClass(1, 0).slope(), Slope(0));
  EXPECT_EQ(CurveClass(0, 1).slope(), Slope::infinity());
  EXPECT_EQ(CurveClass(-2, 1).slope(), Slope(-1, 2));
  EXPECT_EQ(Slope(-1, 2).direction(), CurveClass(2, -1));
  EXPECT_EQ(Slope::infinity().direction(), CurveClass(0, 1));
}

TEST(Slope, TextRoundTrip) {
  EXPECT_EQ(to_string(Slope(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(Slope(3)), "3");
  EXPECT_EQ(to_string(Slope::infinity()), "inf");
  EXPECT_EQ(to_string(CurveClass(-2, 1)), "(-2,1)");
  gen::Engine rng(12);
  for (int i = 0; i < 200; ++i) {
    const Slope s = gen::slope(rng, 40);
    EXPECT_EQ(parse_slope(to_string(s)), s);
  }
}

TEST(FareyAdjacent, Examples) {
  EXPECT_TRUE(farey_adjacent(Slope::infinity(), Slope(0)));
  EXPECT_TRUE(farey_adjacent(Slope(-1), Slope::infinity()));
  EXPECT_FALSE(farey_adjacent(Slope(-1, 2), Slope(1)));
  EXPECT_EQ(code_of([] { farey_adjacent(Slope(2), Slope(2)); }), ErrorCode::EqualSlopes);
}

TEST(FareyAdjacent, SymmetricAndGluingInvariant) {
  gen::Engine rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Slope a = gen::slope(rng, 8);
    const Slope b = gen::slope(rng, 8);
    if (a == b) continue;
    const bool adj = farey_adjacent(a, b);
    EXPECT_EQ(farey_adjacent(b, a), adj);
    const GluingMap g = gen::uniform(rng, 0, 1) ? gen::sl2z(rng) : gen::reflection(rng);
    EXPECT_EQ(farey_adjacent(g.apply(a), g.apply(b)), adj);
  }
}

TEST(GluingMap, Examples) {
  const GluingMap phi_minus(1, 0, -1, 1);
  const GluingMap phi_plus(1, 0, 1, 1);
  EXPECT_EQ(apply_gluing(phi_minus, CurveClass(1, 0)), CurveClass(1, -1));
  EXPECT_EQ(apply_gluing(GluingMap::identity(), CurveClass(-2, 1)), CurveClass(-2, 1));
  EXPECT_EQ(apply_gluing(phi_plus, CurveClass(0, 1)), CurveClass(0, 1));
  EXPECT_EQ(code_of([] { GluingMap(2, 0, 0, 1); }), ErrorCode::NotUnimodular);
}

TEST(GluingMap, InverseUndoesMap) {
  gen::Engine rng(14);
  for (int i = 0; i < 500; ++i) {
    const GluingMap g = gen::uniform(rng, 0, 1) ? gen::sl2z(rng) : gen::reflection(rng);
    const CurveClass c = gen::curve(rng, 20);
    EXPECT_EQ(apply_gluing(g, apply_gluing(g.inverse(), c)), c);
    EXPECT_EQ(apply_gluing(g.inverse(), apply_gluing(g, c)), c);
    EXPECT_EQ(g * g.inverse(), GluingMap::identity());
  }
}

TEST(GluingMap, SendingToInfinity) {
  gen::Engine rng(15);
  for (int i = 0; i < 300; ++i) {
    const CurveClass c = gen::curve(rng, 30);
    const GluingMap g = GluingMap::sending_to_infinity(c);
    EXPECT_EQ(g.determinant(), 1);
    EXPECT_EQ(apply_gluing(g, c), CurveClass(0, 1));
  }
}

TEST(FareyPath, Examples) {
  EXPECT_EQ(farey_path(S("-1/2"), S("0")).slopes(), slopes({"-1/2", "0"}));
  EXPECT_EQ(farey_path(S("inf"), S("-1/2")).slopes(), slopes({"inf", "-1", "-1/2"}));
  EXPECT_EQ(farey_path(S("-2"), S("0")).slopes(), slopes({"-2", "-1", "0"}));
  EXPECT_EQ(code_of([] { farey_path(Slope(3), Slope(3)); }), ErrorCode::EqualSlopes);
}

TEST(FareyPath, RejectsBrokenChains) {
  EXPECT_EQ(code_of([] { FareyPath(slopes({"0", "2"})); }), ErrorCode::NotAdjacent);
  EXPECT_EQ(code_of([] { FareyPath(slopes({"0", "1", "0"})); }), ErrorCode::RepeatedSlope);
}

// Geodesics in the Farey graph are not unique: the BFS oracle finds two for
// each of these pairs, so the library has to pick one deterministically.
TEST(FareyPath, GeodesicsAreNotUnique) {
  const oracle::BoundedFareyGraph graph(4);
  EXPECT_EQ(graph.all_geodesics(oracle::make_frac(0, 1), oracle::make_frac(2, 1)).size(), 2u);
  EXPECT_EQ(graph.all_geodesics(oracle::make_frac(1, 0), oracle::make_frac(-1, 2)).size(), 2u);
  EXPECT_EQ(graph.all_geodesics(oracle::make_frac(-2, 1), oracle::make_frac(0, 1)).size(), 2u);
}

TEST(FareyPath, LengthMatchesBfsForAllBoundedPairs) {
  constexpr std::int64_t bound = 12;
  const oracle::BoundedFareyGraph graph(bound);
  const auto& verts = graph.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto dist = graph.distances_from(i);
    const Slope a(verts[i].p, verts[i].q);
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (i == j) continue;
      const Slope b(verts[j].p, verts[j].q);
      const FareyPath path = farey_path(a, b);
      ASSERT_EQ(static_cast<int>(path.length()), dist[j]) << a << " -> " << b;
      ASSERT_EQ(path.front(), a);
      ASSERT_EQ(path.back(), b);
    }
  }
}

TEST(FareyPath, ResultIsOneOfTheOracleGeodesics) {
  const oracle::BoundedFareyGraph graph(12);
  gen::Engine rng(16);
  for (int i = 0; i < 300; ++i) {
    const Slope a = gen::slope(rng, 12);
    const Slope b = gen::slope(rng, 12);
    if (a == b) continue;
    const FareyPath path = farey_path(a, b);
    std::vector<oracle::Frac> mine;
    for (const Slope& s : path.slopes()) mine.push_back(frac(s));
    bool inside = std::all_of(mine.begin(), mine.end(), [&](auto f) { return graph.contains(f); });
    if (!inside) continue;  // geodesic leaves the bounded window; length already checked
    const auto all = graph.all_geodesics(frac(a), frac(b));
    EXPECT_NE(std::find(all.begin(), all.end(), mine), all.end()) << a << " -> " << b;
  }
}

TEST(FareyPath, LongPathsStayConsistent) {
  gen::Engine rng(17);
  for (int i = 0; i < 200; ++i) {
    const Slope a = gen::slope(rng, 100000);
    const Slope b = gen::slope(rng, 100000);
    if (a == b) continue;
    const FareyPath path = farey_path(a, b);
    // the chain is validated on construction; reversing must not shorten it
    EXPECT_EQ(farey_path(b, a).length(), path.length());
    const GluingMap g = gen::sl2z(rng);
    EXPECT_EQ(farey_path(g.apply(a), g.apply(b)).length(), path.length());
  }
}

TEST(ArcMeasure, Examples) {
  const auto cw = Orientation::Clockwise;
  EXPECT_EQ(compare_arc_measure_to_pi(slopes({"3", "inf", "2"}), cw), ArcComparison::Greater);
  EXPECT_EQ(compare_arc_measure_to_pi(slopes({"2", "inf", "2"}), cw), ArcComparison::Equal);
  EXPECT_EQ(compare_arc_measure_to_pi(slopes({"0", "inf", "2"}), cw), ArcComparison::Less);
  EXPECT_EQ(code_of([] { compare_arc_measure_to_pi(slopes({"1", "1"}), Orientation::Clockwise); }),
            ErrorCode::DegenerateLeg);
  EXPECT_EQ(code_of([] { compare_arc_measure_to_pi(slopes({"1"}), Orientation::Clockwise); }),
            ErrorCode::OutOfDomain);
}

TEST(ArcMeasure, MirrorImageSwapsOrientation) {
  gen::Engine rng(18);
  const GluingMap mirror(1, 0, 0, -1);
  for (int i = 0; i < 500; ++i) {
    std::vector<Slope> path{gen::slope(rng, 9)};
    const auto legs = gen::uniform(rng, 1, 4);
    while (static_cast<Int>(path.size()) <= legs) {
      const Slope s = gen::slope(rng, 9);
      if (!(s == path.back())) path.push_back(s);
    }
    std::vector<Slope> mirrored;
    for (const Slope& s : path) mirrored.push_back(mirror.apply(s));
    EXPECT_EQ(compare_arc_measure_to_pi(path, Orientation::Clockwise),
              compare_arc_measure_to_pi(mirrored, Orientation::CounterClockwise));
  }
}

TEST(ArcMeasure, AgreesWithFloatingAngleSum) {
  gen::Engine rng(19);
  const long double pi = std::acos(-1.0L);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    std::vector<Slope> path{gen::slope(rng, 12)};
    const auto legs = gen::uniform(rng, 1, 4);
    while (static_cast<Int>(path.size()) <= legs) {
      const Slope s = gen::slope(rng, 12);
      if (!(s == path.back())) path.push_back(s);
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    for (const Slope& s : path) raw.emplace_back(s.p(), s.q());
    for (const auto o : {Orientation::Clockwise, Orientation::CounterClockwise}) {
      const long double total = oracle::swept_angle(raw, o == Orientation::Clockwise);
      if (std::fabs(total - pi) < 1e-9L) {
        EXPECT_EQ(compare_arc_measure_to_pi(path, o), ArcComparison::Equal);
        continue;
      }
      ++checked;
      EXPECT_EQ(compare_arc_measure_to_pi(path, o), total < pi ? ArcComparison::Less : ArcComparison::Greater)
          << "total " << static_cast<double>(total);
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(ArcMeasure, InvariantUnderOrientationPreservingMaps) {
  gen::Engine rng(20);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Slope> path{gen::slope(rng, 9)};
    const auto legs = gen::uniform(rng, 1, 4);
    while (static_cast<Int>(path.size()) <= legs) {
      const Slope s = gen::slope(rng, 9);
      if (!(s == path.back())) path.push_back(s);
    }
    const GluingMap g = gen::sl2z(rng);
    std::vector<Slope> moved;
    for (const Slope& s : path) moved.push_back(g.apply(s));
    for (const auto o : {Orientation::Clockwise, Orientation::CounterClockwise}) {
      EXPECT_EQ(compare_arc_measure_to_pi(moved, o), compare_arc_measure_to_pi(path, o));
    }
  }
}
