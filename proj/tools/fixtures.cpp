#include <array>
#include <string>
#include <vector>

#include "cli.hpp"
#include "slopekit/io.hpp"
#include "slopekit/layered.hpp"
#include "slopekit/orbit_lattice.hpp"
#include "slopekit/slope.hpp"
#include "slopekit/splitting.hpp"
#include "slopekit/surgery.hpp"

namespace slopekit::cli {

namespace {

Slope S(const char* text) { return parse_slope(text); }

std::string str(bool b) { return b ? "true" : "false"; }

std::string ints(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string matrix(const GluingMap& g) {
  return "((" + std::to_string(g.a()) + "," + std::to_string(g.b()) + "),(" + std::to_string(g.c()) + "," +
         std::to_string(g.d()) + "))";
}

std::string verdict(const SplitVerdict& v) {
  return v.reason ? to_string(v.status) + " " + to_string(*v.reason) : to_string(v.status);
}

std::string side(const SideVerdict& v) {
  return v.reason ? to_string(v.status) + " " + to_string(*v.reason) : to_string(v.status);
}

std::string buildings(const std::vector<Building>& found) {
  std::string out;
  for (std::size_t i = 0; i < found.size(); ++i) out += (i ? " " : "") + to_string(found[i]);
  return out;
}

std::string lines(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace

nlohmann::ordered_json regenerate_fixtures() {
  nlohmann::ordered_json f = nlohmann::ordered_json::object();

  // slopes and the Farey graph
  f["normalize(2,4)"] = to_string(normalize_slope(2, 4));
  f["normalize(-3,-6)"] = to_string(normalize_slope(-3, -6));
  f["normalize(5,0)"] = to_string(normalize_slope(5, 0));
  f["farey_adjacent(inf,0)"] = str(farey_adjacent(S("inf"), S("0")));
  f["farey_adjacent(-1,inf)"] = str(farey_adjacent(S("-1"), S("inf")));
  f["farey_adjacent(-1/2,1)"] = str(farey_adjacent(S("-1/2"), S("1")));
  f["farey_path(-1/2,0)"] = to_string(farey_path(S("-1/2"), S("0")));
  f["farey_path(inf,-1/2)"] = to_string(farey_path(S("inf"), S("-1/2")));
  f["farey_path(-2,0)"] = to_string(farey_path(S("-2"), S("0")));
  f["apply_gluing(phi_-,(1,0))"] = to_string(apply_gluing(GluingMap(1, 0, -1, 1), CurveClass(1, 0)));
  f["apply_gluing(id,(-2,1))"] = to_string(apply_gluing(GluingMap::identity(), CurveClass(-2, 1)));
  f["apply_gluing(phi_+,(0,1))"] = to_string(apply_gluing(GluingMap(1, 0, 1, 1), CurveClass(0, 1)));
  for (const auto* s : {"3", "2", "0"}) {
    const std::array<Slope, 3> path{S(s), Slope::infinity(), Slope(2)};
    f["arc_cw(" + std::string(s) + ",inf,2)"] = to_string(compare_arc_measure_to_pi(path, Orientation::Clockwise));
  }

  // layered structures
  f["slice_euler(-2,-1,+)"] = to_string(slice_euler_contribution(BasicSlice(S("-2"), S("-1"), Sign::Plus)));
  f["slice_euler(-1,0,-)"] = to_string(slice_euler_contribution(BasicSlice(S("-1"), S("0"), Sign::Minus)));
  f["slice_euler(-1,inf,+)"] = to_string(slice_euler_contribution(BasicSlice(S("-1"), S("inf"), Sign::Plus)));
  for (const auto* signs : {"++", "--", "+-"}) {
    const auto path = parse_slice_path(std::string("-2,-1,0 ; ") + signs);
    f["euler(-2,-1,0;" + std::string(signs) + ")"] = to_string(relative_euler_class(path));
    f["universally_tight(-2,-1,0;" + std::string(signs) + ")"] = str(is_universally_tight(path));
  }
  f["universally_tight(-1,0;+)"] = str(is_universally_tight(parse_slice_path("-1,0 ; +")));
  f["mixed(-2,-1,0;+-,1)"] = str(is_mixed_torus(parse_slice_path("-2,-1,0 ; +-"), 1));
  f["mixed(-2,-1,0;++,1)"] = str(is_mixed_torus(parse_slice_path("-2,-1,0 ; ++"), 1));
  f["mixed(-3,-2,-1,0;++-,2)"] = str(is_mixed_torus(parse_slice_path("-3,-2,-1,0 ; ++-"), 2));
  f["mixed(-3,-2,-1,0;++-,1)"] = str(is_mixed_torus(parse_slice_path("-3,-2,-1,0 ; ++-"), 1));
  for (const auto* s : {"-2", "-5/3", "-1"}) {
    f["negative_cf(" + std::string(s) + ")"] = "[" + ints(negative_continued_fraction(S(s))) + "]";
    f["count_tight(" + std::string(s) + ")"] = std::to_string(count_tight_solid_torus(S(s)));
  }

  // splitting
  const SplitSpec two = SplitSpec::normalized(2);
  for (const Int s : {3, 2, 0}) f["check_split(s2=2,s=" + std::to_string(s) + ")"] = verdict(check_split_slope(two, s));
  for (const Int s2 : {1, 3, 0}) {
    f["splitting_slopes(s2=" + std::to_string(s2) + ")"] = ints(splitting_slopes(SplitSpec::normalized(s2)));
  }

  // Legendrian knots and surgery
  const auto knot = LegendrianModel::standard(-1, 0);
  const auto plus = stabilize(knot, Sign::Plus);
  const auto plus_minus = stabilize(plus, Sign::Minus);
  f["stabilize(-1,0,+)"] = "(" + std::to_string(plus.tb()) + "," + std::to_string(plus.rot()) + ")";
  f["stabilize(-1,0,+-)"] = "(" + std::to_string(plus_minus.tb()) + "," + std::to_string(plus_minus.rot()) + ")";
  f["stabilized_dividing_slope"] = to_string(plus.dividing().slope());
  f["surgery_gluing_map(-)"] = matrix(surgery_gluing_map(Sign::Minus));
  f["surgery_gluing_map(+)"] = matrix(surgery_gluing_map(Sign::Plus));
  f["det(surgery_gluing_map(-))"] = std::to_string(surgery_gluing_map(Sign::Minus).determinant());
  f["det(surgery_gluing_map(+))"] = std::to_string(surgery_gluing_map(Sign::Plus).determinant());
  f["surgery_meridian((-1,1),(1,0),-)"] =
      to_string(contact_surgery_meridian(CurveClass(-1, 1), CurveClass(1, 0), Sign::Minus));
  f["surgery_meridian((0,1),(1,0),-)"] =
      to_string(contact_surgery_meridian(CurveClass(0, 1), CurveClass(1, 0), Sign::Minus));
  f["surgery_meridian((-1,1),(1,0),+)"] =
      to_string(contact_surgery_meridian(CurveClass(-1, 1), CurveClass(1, 0), Sign::Plus));
  for (const auto& fx : theorem2_slope_table()) {
    f["slope_table." + fx.key] = to_string(fx.curve) + " " + to_string(fx.slope);
  }
  for (const Int m : {0, -1, 2}) {
    const auto v = classify_meridian(m);
    std::string value = side(v.m1) + " | " + side(v.m2);
    if (v.identification) value += " | " + v.identification->first + " ; " + v.identification->second;
    f["classify_meridian(" + std::to_string(m) + ")"] = value;
  }
  f["table1(-2,2)"] = lines(render_table1(table1(-2, 2)));
  f["table1(0,0)"] = lines(render_table1(table1(0, 0)));
  f["table1(5,5)"] = lines(render_table1(table1(5, 5)));

  // Reeb orbits
  const auto table = default_mixed_torus_table();
  const std::vector<std::string> n2{"e3", "e4", "h5", "e5"};
  const std::vector<std::string> pair{"e3", "e4"};
  f["homology(e1)"] = to_string(table.at("e1").homology);
  f["cz(h2)"] = std::to_string(table.at("h2").cz_index);
  f["feasible((0,-1),A(e1),{e3,e4,h5,e5})"] =
      buildings(feasible_buildings({0, -1}, table.at("e1").action, table.select(n2)));
  f["feasible((0,1),none,{e3,e4})"] = buildings(feasible_buildings({0, 1}, std::nullopt, table.select(pair)));
  f["feasible((0,1),A(h2),{e3,e4})"] = buildings(feasible_buildings({0, 1}, table.at("h2").action, table.select(pair)));
  f["feasible((0,0),none,{e3,e4})"] = buildings(feasible_buildings({0, 0}, std::nullopt, table.select(pair)));
  f["chern(1,1)"] = std::to_string(chern_from_index(1, 1));
  f["chern(2,2)"] = std::to_string(chern_from_index(2, 2));
  f["chern(0,0)"] = std::to_string(chern_from_index(0, 0));
  const std::vector<std::string> cylinder{"e1", "e2"};
  const std::vector<std::string> family{"e1", "h2"};
  f["breaking_scan({e1,e2})"] = buildings(breaking_scan(table, cylinder).surviving_intermediates());
  f["breaking_scan({e1,h2},{e3,e4,h5,e5})"] = buildings(breaking_scan(table, family, n2).surviving_intermediates());
  f["breaking_scan({}).trivial"] = str(breaking_scan(table, {}).trivial());
  return f;
}

}  // namespace slopekit::cli
