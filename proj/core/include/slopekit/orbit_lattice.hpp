#pragma once

// Combinatorial bookkeeping for Reeb orbits near a mixed torus: homology
// classes, Conley-Zehnder indices and actions, and the necessary conditions a
// holomorphic building has to satisfy (homology matching, action decrease,
// index/Chern parity).
//
// Feasibility here is a necessary condition only. A feasible building says
// nothing about existence of holomorphic curves.

#include <boost/rational.hpp>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slopekit/slope.hpp"

namespace slopekit {

using Rational = boost::rational<Int>;

// Framing in which a Conley-Zehnder index is quoted. Indices quoted in
// different framings cannot be added without a framing correction, which the
// library does not know.
enum class Framing { Torus, Sigma };

struct OrbitDatum {
  std::string name;
  Vec2 homology;  // need not be primitive
  Int cz_index = 0;
  Rational action{1};
  Framing framing = Framing::Torus;

  friend bool operator==(const OrbitDatum&, const OrbitDatum&) = default;
};

// sum(action(lhs)) < sum(action(rhs)), or == for Relation::Equal.
struct ActionConstraint {
  enum class Relation { Less, Equal };
  std::vector<std::string> lhs;
  Relation relation = Relation::Less;
  std::vector<std::string> rhs;

  friend bool operator==(const ActionConstraint&, const ActionConstraint&) = default;
};

class OrbitTable {
 public:
  // Throws ParseError on duplicate or empty names, OutOfDomain on non-positive
  // actions, UnknownOrbit for constraints naming missing orbits and
  // InconsistentConstraints when the stored actions violate a constraint.
  OrbitTable(std::vector<OrbitDatum> orbits, std::vector<ActionConstraint> constraints);

  const std::vector<OrbitDatum>& orbits() const noexcept { return orbits_; }
  const std::vector<ActionConstraint>& constraints() const noexcept { return constraints_; }

  bool contains(std::string_view name) const;
  // Throws UnknownOrbit.
  const OrbitDatum& at(std::string_view name) const;

  Rational action_of(std::span<const std::string> names) const;
  Vec2 homology_of(std::span<const std::string> names) const;
  bool satisfied(const ActionConstraint& c) const;

  // The named orbits, in the order given. Throws UnknownOrbit.
  std::vector<OrbitDatum> select(std::span<const std::string> names) const;

  // Adds one of the unnamed orbits of "arbitrarily large" action. Its action
  // must exceed the action of every orbit already in the table.
  OrbitTable with_large_action_orbit(OrbitDatum orbit) const;

 private:
  std::vector<OrbitDatum> orbits_;
  std::vector<ActionConstraint> constraints_;
};

// Orbits e1..e8, h2, h2', h5, h8 of the standard neighbourhood of a mixed
// torus with dividing slopes 0 and 1 on its two sides. Actions are small
// integers satisfying every stored order constraint.
OrbitTable default_mixed_torus_table();

// A multiset of orbit names; parts are sorted by name with multiplicity >= 1.
class Building {
 public:
  Building() = default;
  explicit Building(std::vector<std::pair<std::string, Int>> parts);

  const std::vector<std::pair<std::string, Int>>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  Int size() const noexcept;
  bool contains(std::string_view name) const;
  // Names repeated by multiplicity.
  std::vector<std::string> names() const;

  friend bool operator==(const Building&, const Building&) = default;
  friend auto operator<=>(const Building&, const Building&) = default;

 private:
  std::vector<std::pair<std::string, Int>> parts_;
};

// Every multiset S over the pool with sum(homology) == target and, when a
// budget is given, sum(action) < budget. Sorted, so the result does not depend
// on pool order.
//
// Without a budget the search is bounded by a linear functional positive on
// every pool class; throws UnboundedSearch when no such functional exists
// (the pool classes do not lie in an open half-plane) or when a pool orbit has
// non-positive action under a budget.
std::vector<Building> feasible_buildings(Vec2 target, std::optional<Rational> action_budget,
                                         std::span<const OrbitDatum> pool);

// Buildings over the pool with sum(homology) == target and at most
// max_orbits orbits counted with multiplicity. Always finite.
std::vector<Building> homology_solutions(Vec2 target, std::span<const OrbitDatum> pool, Int max_orbits);

// c_1 from 2 c_1 = ind - sum(mu_CZ). Throws ParityViolation if ind - cz_sum is odd.
Int chern_from_index(Int ind, Int cz_sum);

// Sum of Conley-Zehnder indices of the named orbits. Throws
// UnsupportedFraming if they are quoted in different framings.
Int cz_sum(const OrbitTable& table, std::span<const std::string> names);

struct BreakingCandidate {
  Building top_positive;  // ends of the original curve that break off
  Building intermediate;  // orbits between the two levels
  Rational top_action;
  Rational intermediate_action;
  bool action_decreases = false;
};

struct BreakingReport {
  std::vector<std::string> positive_ends;
  std::vector<BreakingCandidate> candidates;

  bool trivial() const noexcept { return positive_ends.empty(); }
  // Distinct intermediate orbit sets of the surviving candidates.
  std::vector<Building> surviving_intermediates() const;
};

// Two-level breakings of a curve with the given positive ends: the top level
// takes a nonempty sub-multiset Q of the ends to an intermediate orbit set X
// drawn from the pool (minus the orbits of Q) with [X] = [Q]; it survives
// when action(X) < action(Q). Candidates are all homologically consistent X
// with at most max_intermediate orbits, together with every surviving X.
// `pool` defaults to the whole table.
BreakingReport breaking_scan(const OrbitTable& table, std::span<const std::string> positive_ends,
                             std::optional<std::vector<std::string>> pool = std::nullopt,
                             Int max_intermediate = 3);

// Line-oriented text form:
//   name x y cz action [torus|sigma]
//   constraint a+b < c+d
//   constraint a = b
// '#' starts a comment.
std::string serialize(const OrbitTable& table);
OrbitTable parse_orbit_table(std::string_view text);

std::string to_string(const Building& b);
std::string to_string(const Rational& r);
std::string to_string(Framing f);
Rational parse_rational(std::string_view text);

}  // namespace slopekit
