#include "slopekit/surgery.hpp"

#include <algorithm>
#include <array>

#include "slopekit/error.hpp"

namespace slopekit {

LegendrianModel::LegendrianModel(Int tb, Int rot, CurveClass meridian, CurveClass dividing)
    : tb_(tb), rot_(rot), meridian_(meridian), dividing_(dividing) {
  const Int d = det(meridian_, dividing_);
  if (d != 1 && d != -1) {
    throw DomainError(ErrorCode::NonUnimodularFrame,
                      "meridian " + to_string(meridian_) + " and dividing " + to_string(dividing_) + " are not a basis");
  }
}

LegendrianModel LegendrianModel::standard(Int tb, Int rot) {
  return LegendrianModel(tb, rot, CurveClass(1, 0), CurveClass(0, 1));
}

GluingMap LegendrianModel::standardizing_map() const {
  // Inverse of the matrix with columns (meridian, dividing).
  const GluingMap columns(meridian_.x(), dividing_.x(), meridian_.y(), dividing_.y());
  return columns.inverse();
}

LegendrianModel LegendrianModel::reframed() const {
  const GluingMap g = standardizing_map();
  return LegendrianModel(tb_, rot_, g.apply(meridian_), g.apply(dividing_));
}

LegendrianModel stabilize(const LegendrianModel& knot, Sign sign) {
  const Int orientation = det(knot.meridian(), knot.dividing());
  const CurveClass dividing = CurveClass::primitive_part(knot.dividing().vec() - orientation * knot.meridian().vec());
  const Int tb = knot.tb() - 1;
  const Int rot = knot.rot() + (sign == Sign::Plus ? 1 : -1);
  // The contact framing drops by one meridian: det(new, old) records tb' - tb.
  if (det(dividing, knot.dividing()) != tb - knot.tb()) {
    throw DomainError(ErrorCode::NonUnimodularFrame, "stabilized dividing curve inconsistent with tb");
  }
  return LegendrianModel(tb, rot, knot.meridian(), dividing);
}

GluingMap surgery_gluing_map(Sign sign) {
  return sign == Sign::Plus ? GluingMap(1, 0, 1, 1) : GluingMap(1, 0, -1, 1);
}

CurveClass contact_surgery_meridian(const CurveClass& dividing, const CurveClass& meridian, Sign sign) {
  if (det(meridian, dividing) != 1) {
    throw DomainError(ErrorCode::NonUnimodularFrame,
                      "need det(meridian, dividing) = +1, got det(" + to_string(meridian) + ", " + to_string(dividing) + ")");
  }
  const Vec2 v = sign == Sign::Minus ? dividing.vec() - meridian.vec() : dividing.vec() + meridian.vec();
  return CurveClass::primitive_part(v);
}

std::vector<SlopeFixture> theorem2_slope_table() {
  const LegendrianModel knot = LegendrianModel::standard(0, 0);

  // S_-(L), seen from N(L); then switch to the identification of dN(S_-(L)).
  const LegendrianModel minus = stabilize(knot, Sign::Minus);
  const GluingMap to_minus_frame = minus.standardizing_map();
  const LegendrianModel minus_std = minus.reframed();

  const CurveClass gamma_l = to_minus_frame.apply(knot.dividing());
  const LegendrianModel plus_minus = stabilize(minus_std, Sign::Plus);
  const CurveClass mu_v1 = contact_surgery_meridian(plus_minus.dividing(), minus_std.meridian(), Sign::Minus);

  auto fixture = [](std::string key, std::string label, const CurveClass& c) {
    return SlopeFixture{std::move(key), std::move(label), c, c.slope()};
  };
  return {
      fixture("gamma_S-L", "dividing set of dN(S_-(L))", minus_std.dividing()),
      fixture("meridian_S-L", "meridian of N(S_-(L))", minus_std.meridian()),
      fixture("gamma_L", "dividing set of dN(L)", gamma_l),
      fixture("gamma_S+S-L", "dividing set of dN(S_+S_-(L))", plus_minus.dividing()),
      fixture("meridian_V1", "meridian of V_1", mu_v1),
  };
}

MeridianFrame MeridianFrame::from_fixtures() {
  const auto table = theorem2_slope_table();
  auto find = [&](const std::string& key) {
    const auto it = std::find_if(table.begin(), table.end(), [&](const SlopeFixture& f) { return f.key == key; });
    return it->curve;
  };
  return MeridianFrame{find("gamma_S-L"), find("meridian_S-L"), find("meridian_V1"), find("gamma_L")};
}

MeridianFrame MeridianFrame::transformed(const GluingMap& g) const {
  return MeridianFrame{g.apply(gamma), g.apply(base_meridian), g.apply(v1_meridian), g.apply(outer_dividing)};
}

CurveClass MeridianFrame::candidate(Int m) const {
  return CurveClass::primitive_part(base_meridian.vec() + m * gamma.vec());
}

namespace {

SideVerdict from_sweep(ArcComparison sweep) {
  switch (sweep) {
    case ArcComparison::Less: return {Tightness::TightCandidate, std::nullopt};
    case ArcComparison::Equal: return {Tightness::Overtwisted, OvertwistedReason::MeridionalDisk};
    case ArcComparison::Greater: return {Tightness::Overtwisted, OvertwistedReason::RotationExceedsPi};
  }
  return {};
}

// Slope of `dividing` in coordinates where `meridian` has slope 0 is zero
// exactly when the two classes are parallel.
bool meridional_boundary(const CurveClass& meridian, const CurveClass& dividing) {
  return det(meridian, dividing) == 0;
}

}  // namespace

MeridianVerdict classify_meridian(const MeridianFrame& frame, Int m) {
  MeridianVerdict v;
  v.m = m;
  v.meridian = frame.candidate(m);

  const std::array<Slope, 3> m1_path{v.meridian.slope(), frame.gamma.slope(), frame.v1_meridian.slope()};
  v.m1 = from_sweep(compare_arc_measure_to_pi(m1_path, Orientation::CounterClockwise));

  if (meridional_boundary(v.meridian, frame.outer_dividing)) {
    v.m2 = {Tightness::Overtwisted, OvertwistedReason::MeridionalDisk};
  } else {
    const std::array<Slope, 3> m2_path{v.meridian.slope(), frame.gamma.slope(), frame.outer_dividing.slope()};
    v.m2 = from_sweep(compare_arc_measure_to_pi(m2_path, Orientation::Clockwise));
  }

  if (v.m1.tight_candidate() && v.m2.tight_candidate()) {
    v.identification = std::make_pair(std::string("(S^3, xi_std)"), std::string("(M, xi)"));
  }
  return v;
}

MeridianVerdict classify_meridian(Int m) { return classify_meridian(MeridianFrame::from_fixtures(), m); }

std::vector<MeridianVerdict> table1(const MeridianFrame& frame, Int lo, Int hi) {
  if (lo > hi) throw DomainError(ErrorCode::OutOfDomain, "empty meridian range");
  std::vector<MeridianVerdict> rows;
  for (Int m = lo; m <= hi; ++m) rows.push_back(classify_meridian(frame, m));
  return rows;
}

std::vector<MeridianVerdict> table1(Int lo, Int hi) { return table1(MeridianFrame::from_fixtures(), lo, hi); }

std::vector<std::string> render_table1(const std::vector<MeridianVerdict>& rows) {
  std::vector<const MeridianVerdict*> ordered;
  for (const auto& r : rows) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) { return a->m > b->m; });

  auto cell = [](const SideVerdict& side, const std::optional<std::string>& label) -> std::string {
    if (!side.tight_candidate()) return "X";
    return label.value_or("");
  };

  std::vector<std::array<std::string, 3>> body;
  for (const auto* r : ordered) {
    std::optional<std::string> l1, l2;
    if (r->identification) {
      l1 = r->identification->first;
      l2 = r->identification->second;
    }
    body.push_back({to_string(r->meridian), cell(r->m1, l1), cell(r->m2, l2)});
  }

  std::array<std::size_t, 3> width{std::string("meridian").size(), 2, 2};
  for (const auto& row : body) {
    for (std::size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], row[i].size());
  }

  auto line = [&](const std::array<std::string, 3>& row) {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
      std::string c = row[i];
      if (i + 1 < 3) c.resize(width[i], ' ');
      out += c;
      if (i + 1 < 3) out += " | ";
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  };

  std::vector<std::string> lines{line({"meridian", "M1", "M2"})};
  lines.push_back(std::string(width[0] + 1, '-') + "+" + std::string(width[1] + 2, '-') + "+" +
                  std::string(width[2] + 1, '-'));
  for (const auto& row : body) lines.push_back(line(row));
  return lines;
}

}  // namespace slopekit
