#pragma once

// Legendrian knot neighbourhoods, stabilization, contact (+-1) surgery
// meridians, and the meridian classification for the solid torus S' glued
// back after splitting along the mixed torus dN(S_-(L)).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/layered.hpp"
#include "slopekit/slope.hpp"
#include "slopekit/splitting.hpp"

namespace slopekit {

// Boundary data of a standard neighbourhood N(L), expressed in some
// identification of dN(L) with R^2/Z^2.
class LegendrianModel {
 public:
  // Throws NonUnimodularFrame unless det(meridian, dividing) = +-1.
  LegendrianModel(Int tb, Int rot, CurveClass meridian, CurveClass dividing);

  // Meridian (1,0), dividing curves (0,1).
  static LegendrianModel standard(Int tb, Int rot);

  Int tb() const noexcept { return tb_; }
  Int rot() const noexcept { return rot_; }
  const CurveClass& meridian() const noexcept { return meridian_; }
  const CurveClass& dividing() const noexcept { return dividing_; }

  // Map taking this identification to the standard one: meridian -> (1,0),
  // dividing -> (0,1).
  GluingMap standardizing_map() const;
  LegendrianModel reframed() const;

  friend bool operator==(const LegendrianModel&, const LegendrianModel&) = default;

 private:
  Int tb_;
  Int rot_;
  CurveClass meridian_;
  CurveClass dividing_;
};

// S_+ or S_-: tb drops by one, rot moves by +-1, and the dividing curves of
// the smaller neighbourhood N(S(L)) are reported in the parent's
// identification (slope -1 when the parent is standard).
LegendrianModel stabilize(const LegendrianModel& knot, Sign sign);

// phi_+ = ((1,0),(1,1)), phi_- = ((1,0),(-1,1)).
GluingMap surgery_gluing_map(Sign sign);

// New meridian after contact (sign)1 surgery, in the old coordinates:
// dividing - meridian for -1 surgery, dividing + meridian for +1 surgery.
// Throws NonUnimodularFrame unless det(meridian, dividing) = +1.
CurveClass contact_surgery_meridian(const CurveClass& dividing, const CurveClass& meridian, Sign sign);

struct SlopeFixture {
  std::string key;    // stable identifier, e.g. "gamma_L"
  std::string label;  // human-readable name
  CurveClass curve;
  Slope slope;
};

// Boundary data of the construction in the identification of dN(S_-(L)):
// dividing set of N(S_-L), meridian of N(S_-L), dividing set of N(L),
// dividing set of N(S_+S_-L), and the meridian of V_1 after Legendrian
// surgery on S_+S_-(L). Every entry is derived through stabilize /
// reframed / contact_surgery_meridian.
std::vector<SlopeFixture> theorem2_slope_table();

// The classes the meridian classification depends on. Candidate meridians
// for S' are base_meridian + m * gamma, i.e. (1,m) in the default frame.
struct MeridianFrame {
  CurveClass gamma;           // common dividing set of V_1 and S'
  CurveClass base_meridian;   // meridian of N(S_-(L))
  CurveClass v1_meridian;     // meridian of V_1
  CurveClass outer_dividing;  // dividing set of dN(L)

  static MeridianFrame from_fixtures();
  MeridianFrame transformed(const GluingMap& g) const;
  CurveClass candidate(Int m) const;
};

struct SideVerdict {
  Tightness status = Tightness::TightCandidate;
  std::optional<OvertwistedReason> reason;

  bool tight_candidate() const noexcept { return status == Tightness::TightCandidate; }
  friend bool operator==(const SideVerdict&, const SideVerdict&) = default;
};

struct MeridianVerdict {
  Int m = 0;
  CurveClass meridian{1, 0};
  SideVerdict m1;
  SideVerdict m2;
  // Set when both sides are tight candidates: (M1 label, M2 label).
  std::optional<std::pair<std::string, std::string>> identification;

  friend bool operator==(const MeridianVerdict&, const MeridianVerdict&) = default;
};

// M1 = V_1 u S': contact planes turn counterclockwise from the meridian of S'
// to gamma and on to the meridian of V_1. M2 = V_2 u S': clockwise from the
// meridian of S' through gamma to the dividing set of dN(L); if the meridian
// of S' is parallel to that dividing set, (N(L) - N(S_-L)) u S' is a solid
// torus with meridional boundary dividing curves.
MeridianVerdict classify_meridian(const MeridianFrame& frame, Int m);
MeridianVerdict classify_meridian(Int m);

// classify_meridian over [lo, hi], ascending. Throws OutOfDomain if lo > hi.
std::vector<MeridianVerdict> table1(Int lo, Int hi);
std::vector<MeridianVerdict> table1(const MeridianFrame& frame, Int lo, Int hi);

// Text layout of the table: rows in descending m, "X" for overtwisted cells
// and the identification labels on the tight row.
std::vector<std::string> render_table1(const std::vector<MeridianVerdict>& rows);

}  // namespace slopekit
