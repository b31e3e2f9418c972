#include "slopekit/orbit_lattice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "slopekit/detail/checked.hpp"
#include "slopekit/error.hpp"

namespace slopekit {

namespace {

Rational sum_actions(const OrbitTable& table, std::span<const std::string> names) {
  Rational total{0};
  for (const auto& n : names) total += table.at(n).action;
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// OrbitTable

OrbitTable::OrbitTable(std::vector<OrbitDatum> orbits, std::vector<ActionConstraint> constraints)
    : orbits_(std::move(orbits)), constraints_(std::move(constraints)) {
  std::set<std::string> seen;
  for (const auto& o : orbits_) {
    if (o.name.empty()) throw DomainError(ErrorCode::ParseError, "orbit with empty name");
    if (!seen.insert(o.name).second) throw DomainError(ErrorCode::ParseError, "duplicate orbit " + o.name);
    if (o.action <= 0) {
      throw DomainError(ErrorCode::OutOfDomain, "orbit " + o.name + " has non-positive action " + to_string(o.action));
    }
  }
  for (const auto& c : constraints_) {
    if (c.lhs.empty() || c.rhs.empty()) throw DomainError(ErrorCode::ParseError, "constraint with an empty side");
    if (!satisfied(c)) {
      throw DomainError(ErrorCode::InconsistentConstraints, "stored actions violate a constraint on " + c.lhs.front());
    }
  }
}

bool OrbitTable::contains(std::string_view name) const {
  return std::any_of(orbits_.begin(), orbits_.end(), [&](const OrbitDatum& o) { return o.name == name; });
}

const OrbitDatum& OrbitTable::at(std::string_view name) const {
  const auto it = std::find_if(orbits_.begin(), orbits_.end(), [&](const OrbitDatum& o) { return o.name == name; });
  if (it == orbits_.end()) throw DomainError(ErrorCode::UnknownOrbit, "no orbit named " + std::string(name));
  return *it;
}

Rational OrbitTable::action_of(std::span<const std::string> names) const { return sum_actions(*this, names); }

Vec2 OrbitTable::homology_of(std::span<const std::string> names) const {
  Vec2 total;
  for (const auto& n : names) total += at(n).homology;
  return total;
}

bool OrbitTable::satisfied(const ActionConstraint& c) const {
  const Rational l = action_of(c.lhs);
  const Rational r = action_of(c.rhs);
  return c.relation == ActionConstraint::Relation::Less ? l < r : l == r;
}

std::vector<OrbitDatum> OrbitTable::select(std::span<const std::string> names) const {
  std::vector<OrbitDatum> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(at(n));
  return out;
}

OrbitTable OrbitTable::with_large_action_orbit(OrbitDatum orbit) const {
  for (const auto& o : orbits_) {
    if (orbit.action <= o.action) {
      throw DomainError(ErrorCode::InconsistentConstraints,
                        "injected orbit " + orbit.name + " must have larger action than " + o.name);
    }
  }
  std::vector<OrbitDatum> orbits = orbits_;
  orbits.push_back(std::move(orbit));
  return OrbitTable(std::move(orbits), constraints_);
}

OrbitTable default_mixed_torus_table() {
  using Rel = ActionConstraint::Relation;
  // Slopes 0 and 1 on the two sides of the mixed torus. Homology classes of
  // e1, e2, e3, e4, e5, h2, h2', h5 are the quoted ones; e6, e7, e8, h8 sit in
  // the mirror-image neighbourhood and are assigned by that symmetry so that
  // [h2'] = [e6] + [e7] just as [h2] = [e3] + [e4].
  std::vector<OrbitDatum> orbits{
      {"e1", {0, -1}, 1, Rational(2), Framing::Torus},
      {"e2", {0, 1}, 1, Rational(2), Framing::Torus},
      {"e3", {-1, 0}, 1, Rational(3), Framing::Sigma},
      {"e4", {1, 1}, 1, Rational(3), Framing::Torus},
      {"e5", {1, 1}, 1, Rational(3), Framing::Torus},
      {"h2", {0, 1}, 0, Rational(1), Framing::Torus},
      {"h2'", {0, 1}, 0, Rational(1), Framing::Torus},
      {"h5", {1, 1}, 0, Rational(1), Framing::Torus},
      {"e6", {-1, 1}, 1, Rational(3), Framing::Torus},
      {"e7", {1, 0}, 1, Rational(3), Framing::Sigma},
      {"e8", {-1, 1}, 1, Rational(3), Framing::Torus},
      {"h8", {-1, 1}, 0, Rational(1), Framing::Torus},
  };

  std::vector<ActionConstraint> constraints;
  auto less = [&](std::vector<std::string> l, std::vector<std::string> r) {
    constraints.push_back({std::move(l), Rel::Less, std::move(r)});
  };
  // e3 and e4 have larger action than every other named orbit of N1 u N2.
  for (const char* big : {"e3", "e4"}) {
    for (const char* small : {"e1", "e2", "h2", "h5"}) less({small}, {big});
  }
  // Mirror statement for N1' u N2'.
  for (const char* big : {"e6", "e7"}) {
    for (const char* small : {"e1", "e2", "h2'", "h8"}) less({small}, {big});
  }
  less({"h2"}, {"e3", "e4"});
  less({"h2'"}, {"e6", "e7"});
  // The cylinders e2 -> h2 and e2 -> h2' lose action.
  less({"h2"}, {"e2"});
  less({"h2'"}, {"e2"});
  constraints.push_back({{"e1"}, Rel::Equal, {"e2"}});

  return OrbitTable(std::move(orbits), std::move(constraints));
}

// ---------------------------------------------------------------------------
// Building

Building::Building(std::vector<std::pair<std::string, Int>> parts) {
  std::map<std::string, Int> merged;
  for (auto& [name, k] : parts) {
    if (k < 0) throw DomainError(ErrorCode::OutOfDomain, "negative multiplicity for " + name);
    if (k > 0) merged[name] += k;
  }
  parts_.assign(merged.begin(), merged.end());
}

Int Building::size() const noexcept {
  Int n = 0;
  for (const auto& p : parts_) n += p.second;
  return n;
}

bool Building::contains(std::string_view name) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const auto& p) { return p.first == name; });
}

std::vector<std::string> Building::names() const {
  std::vector<std::string> out;
  for (const auto& [name, k] : parts_) {
    for (Int i = 0; i < k; ++i) out.push_back(name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

void check_pool(std::span<const OrbitDatum> pool) {
  std::set<std::string_view> seen;
  for (const auto& o : pool) {
    if (!seen.insert(o.name).second) throw DomainError(ErrorCode::OutOfDomain, "orbit " + o.name + " repeated in pool");
  }
}

// Depth-first enumeration of multiplicity vectors. `max_mult(i, state)` bounds
// the multiplicity of pool[i]; `admit(state)` accepts a finished vector.
template <typename State, typename Step, typename Accept>
void enumerate(std::span<const OrbitDatum> pool, std::size_t i, State& state, std::vector<Int>& mult, Step&& step,
               Accept&& accept) {
  if (i == pool.size()) {
    accept(state, mult);
    return;
  }
  State saved = state;
  for (Int k = 0;; ++k) {
    mult[i] = k;
    enumerate(pool, i + 1, state, mult, step, accept);
    if (!step(i, state)) break;
  }
  state = saved;
  mult[i] = 0;
}

Building to_building(std::span<const OrbitDatum> pool, const std::vector<Int>& mult) {
  std::vector<std::pair<std::string, Int>> parts;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mult[i] > 0) parts.emplace_back(pool[i].name, mult[i]);
  }
  return Building(std::move(parts));
}

// Integer functional positive on every pool class, if the classes lie in an
// open half-plane.
std::optional<Vec2> positive_functional(std::span<const OrbitDatum> pool) {
  std::vector<Vec2> dirs;
  for (const auto& o : pool) {
    if (o.homology == Vec2{}) return std::nullopt;
    dirs.push_back(o.homology);
  }
  if (dirs.empty()) return Vec2{1, 0};

  auto half = [](Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  auto angle_less = [&](Vec2 a, Vec2 b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return detail::det2_sign(a.x, a.y, b.x, b.y) > 0;
  };
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(),
                         [&](Vec2 a, Vec2 b) { return !angle_less(a, b) && !angle_less(b, a); }),
             dirs.end());
  if (dirs.size() == 1) return dirs.front();

  // Look for a counterclockwise gap strictly larger than pi between cyclically
  // consecutive directions; the cone then runs from the gap's far end (ccw
  // start) to its near end (ccw finish).
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Vec2 finish = dirs[i];
    const Vec2 start = dirs[(i + 1) % dirs.size()];
    if (detail::det2_sign(finish.x, finish.y, start.x, start.y) < 0) {
      // det(start, v) + det(v, finish) is positive on the closed cone.
      return Vec2{-start.y + finish.y, start.x - finish.x};
    }
  }
  return std::nullopt;
}

Int dot(Vec2 a, Vec2 b) {
  return detail::checked_add(detail::checked_mul(a.x, b.x), detail::checked_mul(a.y, b.y));
}

}  // namespace

std::vector<Building> feasible_buildings(Vec2 target, std::optional<Rational> action_budget,
                                         std::span<const OrbitDatum> pool) {
  check_pool(pool);
  std::vector<Building> out;
  std::vector<Int> mult(pool.size(), 0);

  struct State {
    Vec2 homology;
    Rational action{0};
    Int functional = 0;
  };
  State state;

  if (action_budget) {
    for (const auto& o : pool) {
      if (o.action <= 0) throw DomainError(ErrorCode::UnboundedSearch, "orbit " + o.name + " has non-positive action");
    }
    const Rational budget = *action_budget;
    // Multiplicity of pool[i] is capped at floor(budget / action) through the
    // running total.
    auto step = [&](std::size_t i, State& s) {
      s.action += pool[i].action;
      s.homology += pool[i].homology;
      return s.action < budget;
    };
    auto accept = [&](const State& s, const std::vector<Int>& m) {
      if (s.homology == target && s.action < budget) out.push_back(to_building(pool, m));
    };
    if (Rational(0) < budget) enumerate(pool, 0, state, mult, step, accept);
  } else {
    const auto f = positive_functional(pool);
    if (!f) {
      throw DomainError(ErrorCode::UnboundedSearch,
                        "pool classes do not lie in an open half-plane; give an action budget");
    }
    const Int limit = dot(*f, target);
    auto step = [&](std::size_t i, State& s) {
      s.functional = detail::checked_add(s.functional, dot(*f, pool[i].homology));
      s.homology += pool[i].homology;
      return s.functional <= limit;
    };
    auto accept = [&](const State& s, const std::vector<Int>& m) {
      if (s.homology == target) out.push_back(to_building(pool, m));
    };
    if (limit >= 0) enumerate(pool, 0, state, mult, step, accept);
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Building> homology_solutions(Vec2 target, std::span<const OrbitDatum> pool, Int max_orbits) {
  check_pool(pool);
  std::vector<Building> out;
  std::vector<Int> mult(pool.size(), 0);
  struct State {
    Vec2 homology;
    Int count = 0;
  };
  State state;
  auto step = [&](std::size_t i, State& s) {
    s.homology += pool[i].homology;
    ++s.count;
    return s.count <= max_orbits;
  };
  auto accept = [&](const State& s, const std::vector<Int>& m) {
    if (s.homology == target) out.push_back(to_building(pool, m));
  };
  if (max_orbits >= 0) enumerate(pool, 0, state, mult, step, accept);
  std::sort(out.begin(), out.end());
  return out;
}

Int chern_from_index(Int ind, Int cz_sum) {
  const Int diff = detail::checked_sub(ind, cz_sum);
  if (diff % 2 != 0) {
    throw DomainError(ErrorCode::ParityViolation,
                      "ind - mu_CZ = " + std::to_string(diff) + " is odd; 2 c_1 must be even");
  }
  return diff / 2;
}

Int cz_sum(const OrbitTable& table, std::span<const std::string> names) {
  Int total = 0;
  std::optional<Framing> framing;
  for (const auto& n : names) {
    const OrbitDatum& o = table.at(n);
    if (framing && *framing != o.framing) {
      throw DomainError(ErrorCode::UnsupportedFraming,
                        "Conley-Zehnder indices of " + names.front() + " and " + n + " use different framings");
    }
    framing = o.framing;
    total = detail::checked_add(total, o.cz_index);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Breaking scan

std::vector<Building> BreakingReport::surviving_intermediates() const {
  std::set<Building> seen;
  for (const auto& c : candidates) {
    if (c.action_decreases) seen.insert(c.intermediate);
  }
  return {seen.begin(), seen.end()};
}

BreakingReport breaking_scan(const OrbitTable& table, std::span<const std::string> positive_ends,
                             std::optional<std::vector<std::string>> pool, Int max_intermediate) {
  BreakingReport report;
  report.positive_ends.assign(positive_ends.begin(), positive_ends.end());
  for (const auto& n : positive_ends) (void)table.at(n);
  if (positive_ends.empty()) return report;

  std::vector<OrbitDatum> full_pool;
  if (pool) {
    full_pool = table.select(*pool);
  } else {
    full_pool = table.orbits();
  }

  std::vector<std::pair<std::string, Int>> ends_parts;
  for (const auto& n : positive_ends) ends_parts.emplace_back(n, 1);
  const Building ends(std::move(ends_parts));
  const auto& parts = ends.parts();

  // Every nonempty sub-multiset Q of the positive ends.
  std::vector<Int> take(parts.size(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < parts.size() && take[i] == parts[i].second) take[i++] = 0;
    if (i == parts.size()) break;
    ++take[i];

    std::vector<std::pair<std::string, Int>> q_parts;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (take[j] > 0) q_parts.emplace_back(parts[j].first, take[j]);
    }
    const Building top(std::move(q_parts));
    const auto top_names = top.names();
    const Vec2 target = table.homology_of(top_names);
    const Rational top_action = table.action_of(top_names);

    std::vector<OrbitDatum> sub_pool;
    for (const auto& o : full_pool) {
      if (!top.contains(o.name)) sub_pool.push_back(o);
    }

    std::set<Building> intermediates;
    for (auto& b : homology_solutions(target, sub_pool, max_intermediate)) intermediates.insert(std::move(b));
    for (auto& b : feasible_buildings(target, top_action, sub_pool)) intermediates.insert(std::move(b));

    for (const auto& x : intermediates) {
      if (x.empty()) continue;
      BreakingCandidate c;
      c.top_positive = top;
      c.intermediate = x;
      c.top_action = top_action;
      c.intermediate_action = table.action_of(x.names());
      c.action_decreases = c.intermediate_action < top_action;
      report.candidates.push_back(std::move(c));
    }
  }

  std::stable_sort(report.candidates.begin(), report.candidates.end(), [](const auto& a, const auto& b) {
    if (a.top_positive != b.top_positive) return a.top_positive < b.top_positive;
    return a.intermediate < b.intermediate;
  });
  return report;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(Framing f) { return f == Framing::Torus ? "torus" : "sigma"; }

std::string to_string(const Building& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, k] : b.parts()) {
    if (!first) out += ",";
    first = false;
    if (k > 1) out += std::to_string(k) + "*";
    out += name;
  }
  return out + "}";
}

namespace {

Int parse_int(std::string_view s, std::string_view what) {
  Int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split_sum(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    if (item.empty()) throw DomainError(ErrorCode::ParseError, "empty term in '" + s + "'");
    out.push_back(item);
  }
  return out;
}

std::string join_sum(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "+" : "") + names[i];
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"));
  const Int num = parse_int(text.substr(0, slash), "numerator");
  const Int den = parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) throw DomainError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string serialize(const OrbitTable& table) {
  std::ostringstream os;
  for (const auto& o : table.orbits()) {
    os << o.name << ' ' << o.homology.x << ' ' << o.homology.y << ' ' << o.cz_index << ' ' << to_string(o.action);
    if (o.framing != Framing::Torus) os << ' ' << to_string(o.framing);
    os << '\n';
  }
  for (const auto& c : table.constraints()) {
    os << "constraint " << join_sum(c.lhs) << (c.relation == ActionConstraint::Relation::Less ? " < " : " = ")
       << join_sum(c.rhs) << '\n';
  }
  return os.str();
}

OrbitTable parse_orbit_table(std::string_view text) {
  std::vector<OrbitDatum> orbits;
  std::vector<ActionConstraint> constraints;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    if (tok[0] == "constraint") {
      if (tok.size() != 4 || (tok[2] != "<" && tok[2] != "=")) {
        throw DomainError(ErrorCode::ParseError, where + ": expected 'constraint lhs < rhs'");
      }
      constraints.push_back({split_sum(tok[1]),
                             tok[2] == "<" ? ActionConstraint::Relation::Less : ActionConstraint::Relation::Equal,
                             split_sum(tok[3])});
      continue;
    }
    if (tok.size() != 5 && tok.size() != 6) {
      throw DomainError(ErrorCode::ParseError, where + ": expected 'name x y cz action [torus|sigma]'");
    }
    OrbitDatum o;
    o.name = tok[0];
    o.homology = {parse_int(tok[1], "x"), parse_int(tok[2], "y")};
    o.cz_index = parse_int(tok[3], "cz");
    o.action = parse_rational(tok[4]);
    if (tok.size() == 6) {
      if (tok[5] == "torus") {
        o.framing = Framing::Torus;
      } else if (tok[5] == "sigma") {
        o.framing = Framing::Sigma;
      } else {
        throw DomainError(ErrorCode::ParseError, where + ": unknown framing '" + tok[5] + "'");
      }
    }
    orbits.push_back(std::move(o));
  }
  return OrbitTable(std::move(orbits), std::move(constraints));
}

}  // namespace slopekit
