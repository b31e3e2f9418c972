#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "slopekit/error.hpp"
#include "slopekit/io.hpp"
#include "slopekit/layered.hpp"
#include "slopekit/orbit_lattice.hpp"
#include "slopekit/slope.hpp"
#include "slopekit/splitting.hpp"
#include "slopekit/surgery.hpp"

#ifndef SLOPEKIT_DEFAULT_FIXTURE_DIR
#define SLOPEKIT_DEFAULT_FIXTURE_DIR "data"
#endif

namespace slopekit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFixtureEnv = "SLOPEKIT_FIXTURE_DIR";
constexpr const char* kGoldenFile = "fixtures.json";

constexpr const char* kGrammar =
    "usage: slopekit [--format json|text] [--quiet] <command> ...\n"
    "  farey path <slope> <slope>\n"
    "  farey adjacent <slope> <slope>\n"
    "  euler \"<slopes> ; <signs>\"\n"
    "  mixed \"<slopes> ; <signs>\" [--interface <i>]\n"
    "  count-tight <slope>\n"
    "  split --s2 <int>\n"
    "  surgery-table --min <int> --max <int>\n"
    "  orbits feasible --target \"(x,y)\" [--budget <p/q>] --pool <a,b,...> [--table <file>]\n"
    "  orbits scan --ends <a,b,...> [--pool <a,b,...>] [--max-intermediate <n>] [--table <file>]\n"
    "  orbits table [--table <file>]\n"
    "  fixtures [--update] [--dir <dir>]\n"
    "slopes are p/q, integers or inf; signs are + and -, one per slice\n";

// ---------------------------------------------------------------- helpers

std::string str(const Slope& s) { return to_string(s); }
std::string str(Vec2 v) { return to_string(v); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

Json side_json(Tightness status, const std::optional<OvertwistedReason>& reason) {
  Json j{{"status", to_string(status)}};
  j["reason"] = reason ? Json(to_string(*reason)) : Json(nullptr);
  return j;
}

std::string side_text(Tightness status, const std::optional<OvertwistedReason>& reason) {
  return reason ? to_string(status) + " (" + to_string(*reason) + ")" : to_string(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrbitTable load_table(const std::string& path) {
  return path.empty() ? default_mixed_torus_table() : parse_orbit_table(read_file(path));
}

// ---------------------------------------------------------------- commands

void farey_path_cmd(CommandResult& r, const std::string& from, const std::string& to) {
  const FareyPath path = farey_path(parse_slope(from), parse_slope(to));
  std::vector<std::string> slopes;
  for (const Slope& s : path.slopes()) slopes.push_back(str(s));
  r.payload = {{"from", str(path.front())}, {"to", str(path.back())}, {"path", slopes}, {"length", path.length()}};
  r.text = {join(slopes, " ")};
}

void farey_adjacent_cmd(CommandResult& r, const std::string& a, const std::string& b) {
  const Slope sa = parse_slope(a);
  const Slope sb = parse_slope(b);
  const bool adj = farey_adjacent(sa, sb);
  r.payload = {{"a", str(sa)}, {"b", str(sb)}, {"adjacent", adj}};
  r.text = {str(adj)};
}

void euler_cmd(CommandResult& r, const std::string& text) {
  const SlicePath path = parse_slice_path(text);
  std::vector<std::string> contributions;
  for (const Vec2 v : slice_contributions(path)) contributions.push_back(str(v));
  const Vec2 e = relative_euler_class(path);
  const bool ut = is_universally_tight(path);
  r.payload = {{"path", to_string(path)},
               {"contributions", contributions},
               {"euler_class", str(e)},
               {"universally_tight", ut}};
  r.text = {"euler class: " + str(e), "contributions: " + join(contributions, " "), "universally tight: " + str(ut)};
}

void mixed_cmd(CommandResult& r, const std::string& text, std::optional<std::size_t> interface) {
  const SlicePath path = parse_slice_path(text);
  if (interface) {
    const bool mixed = is_mixed_torus(path, *interface);
    r.payload = {{"path", to_string(path)}, {"interface", *interface}, {"mixed", mixed}};
    r.text = {str(mixed)};
    return;
  }
  std::vector<std::size_t> mixed;
  for (std::size_t i = 1; i < path.slice_count(); ++i) {
    if (is_mixed_torus(path, i)) mixed.push_back(i);
  }
  r.payload = {{"path", to_string(path)}, {"mixed_interfaces", mixed}};
  std::vector<std::string> names;
  for (const auto i : mixed) names.push_back(std::to_string(i));
  r.text = {mixed.empty() ? "no mixed interface" : "mixed interfaces: " + join(names, " ")};
}

void count_tight_cmd(CommandResult& r, const std::string& text) {
  const Slope s = parse_slope(text);
  const auto cf = negative_continued_fraction(s);
  const Int count = count_tight_solid_torus(s);
  std::vector<std::string> terms;
  for (const Int t : cf) terms.push_back(std::to_string(t));
  r.payload = {{"slope", str(s)}, {"continued_fraction", cf}, {"count", count}};
  r.text = {"continued fraction: [" + join(terms, ", ") + "]", "tight structures: " + std::to_string(count)};
}

void split_cmd(CommandResult& r, Int s2) {
  const SplitSpec spec = SplitSpec::normalized(s2);
  const auto tight = splitting_slopes(spec);
  // Every verdict in a window one step past both boundary slopes.
  const Int lo = std::min<Int>(-1, s2) - 1;
  const Int hi = std::max<Int>(-1, s2) + 1;
  Json verdicts = Json::array();
  std::vector<std::string> lines;
  std::vector<std::string> tight_names;
  for (const Int s : tight) tight_names.push_back(std::to_string(s));
  lines.push_back(tight.empty() ? "no tight splitting slope exists"
                                : "tight splitting slopes: " + join(tight_names, " "));
  for (Int s = lo; s <= hi; ++s) {
    const auto v = check_split_slope(spec, s);
    Json j = side_json(v.status, v.reason);
    j["slope"] = str(v.slope);
    j["toward_s2"] = to_string(v.toward_s2);
    j["toward_s0"] = to_string(v.toward_s0);
    verdicts.push_back(std::move(j));
    lines.push_back("s=" + str(v.slope) + ": " + side_text(v.status, v.reason) + " [toward s2: " +
                    to_string(v.toward_s2) + ", toward s0: " + to_string(v.toward_s0) + "]");
  }
  r.payload = {{"s0", str(spec.s0())}, {"s1", str(spec.s1())}, {"s2", str(spec.s2())}, {"tight_slopes", tight},
               {"verdicts", verdicts}};
  r.text = std::move(lines);
}

void surgery_table_cmd(CommandResult& r, Int lo, Int hi) {
  const auto rows = table1(lo, hi);
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j{{"m", row.m}, {"meridian", to_string(row.meridian)}};
    j["m1"] = side_json(row.m1.status, row.m1.reason);
    j["m2"] = side_json(row.m2.status, row.m2.reason);
    j["identification"] = row.identification ? Json::array({row.identification->first, row.identification->second})
                                             : Json(nullptr);
    out.push_back(std::move(j));
  }
  r.payload = {{"min", lo}, {"max", hi}, {"rows", out}};
  r.text = render_table1(rows);
}

void orbits_feasible_cmd(CommandResult& r, const std::string& table_path, const std::string& target_text,
                         const std::string& budget_text, const std::string& pool_text) {
  const OrbitTable table = load_table(table_path);
  const Vec2 target = parse_vec2(target_text);
  const std::optional<Rational> budget =
      budget_text.empty() ? std::nullopt : std::optional<Rational>(parse_rational(budget_text));
  const auto names = split_names(pool_text);
  const auto pool = table.select(names);
  const auto found = feasible_buildings(target, budget, pool);
  std::vector<std::string> buildings;
  for (const auto& b : found) buildings.push_back(to_string(b));
  r.payload = {{"target", str(target)},
               {"budget", budget ? Json(to_string(*budget)) : Json(nullptr)},
               {"pool", names},
               {"buildings", buildings}};
  r.text = buildings.empty() ? std::vector<std::string>{"no feasible building"} : buildings;
}

void orbits_scan_cmd(CommandResult& r, const std::string& table_path, const std::string& ends_text,
                     const std::string& pool_text, Int max_intermediate) {
  const OrbitTable table = load_table(table_path);
  const auto ends = split_names(ends_text);
  const std::optional<std::vector<std::string>> pool =
      pool_text.empty() ? std::nullopt : std::optional<std::vector<std::string>>(split_names(pool_text));
  const auto report = breaking_scan(table, ends, pool, max_intermediate);

  Json candidates = Json::array();
  std::vector<std::string> lines;
  std::vector<std::string> surviving;
  for (const auto& b : report.surviving_intermediates()) surviving.push_back(to_string(b));
  if (report.trivial()) {
    lines.push_back("trivial: no positive ends");
  } else {
    lines.push_back(surviving.empty() ? "no surviving intermediate"
                                      : "surviving intermediates: " + join(surviving, " "));
  }
  for (const auto& c : report.candidates) {
    candidates.push_back({{"top", to_string(c.top_positive)},
                          {"intermediate", to_string(c.intermediate)},
                          {"top_action", to_string(c.top_action)},
                          {"intermediate_action", to_string(c.intermediate_action)},
                          {"action_decreases", c.action_decreases}});
    lines.push_back(to_string(c.top_positive) + " -> " + to_string(c.intermediate) + ": action " +
                    to_string(c.top_action) + " -> " + to_string(c.intermediate_action) +
                    (c.action_decreases ? ", survives" : ", excluded"));
  }
  r.payload = {{"ends", ends},
               {"pool", pool ? Json(*pool) : Json(nullptr)},
               {"max_intermediate", max_intermediate},
               {"trivial", report.trivial()},
               {"surviving", surviving},
               {"candidates", candidates}};
  r.text = std::move(lines);
}

void orbits_table_cmd(CommandResult& r, const std::string& table_path) {
  const OrbitTable table = load_table(table_path);
  Json orbits = Json::array();
  for (const auto& o : table.orbits()) {
    orbits.push_back({{"name", o.name},
                      {"homology", str(o.homology)},
                      {"cz", o.cz_index},
                      {"action", to_string(o.action)},
                      {"framing", to_string(o.framing)}});
  }
  const std::string text = serialize(table);
  std::vector<std::string> lines;
  std::vector<std::string> constraints;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    lines.push_back(line);
    if (line.rfind("constraint ", 0) == 0) constraints.push_back(line.substr(11));
  }
  r.payload = {{"orbits", orbits}, {"constraints", constraints}};
  r.text = std::move(lines);
}

void fixtures_cmd(CommandResult& r, const Environment& env, const std::string& dir_flag, bool update) {
  std::string dir = dir_flag;
  if (dir.empty() && env.fixture_dir) dir = *env.fixture_dir;
  if (dir.empty()) {
    const char* from_env = std::getenv(kFixtureEnv);
    dir = from_env && *from_env ? from_env : default_fixture_dir();
  }
  const auto file = (std::filesystem::path(dir) / kGoldenFile).string();
  const Json actual = regenerate_fixtures();

  if (update) {
    std::filesystem::create_directories(dir);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << Json{{"schema", kSchemaVersion}, {"fixtures", actual}}.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + file);
    r.payload = {{"file", file}, {"checked", actual.size()}, {"written", true}, {"diverged", Json::array()}};
    r.text = {"wrote " + std::to_string(actual.size()) + " fixtures to " + file};
    return;
  }

  Json stored = Json::object();
  if (std::filesystem::exists(file)) stored = Json::parse(read_file(file)).value("fixtures", Json::object());

  Json diverged = Json::array();
  std::vector<std::string> lines;
  for (const auto& [key, value] : actual.items()) {
    if (!stored.contains(key)) {
      diverged.push_back({{"key", key}, {"expected", nullptr}, {"actual", value}});
      lines.push_back(key + ": missing from goldens, regenerated " + value.get<std::string>());
    } else if (stored[key] != value) {
      diverged.push_back({{"key", key}, {"expected", stored[key]}, {"actual", value}});
      lines.push_back(key + ": golden " + stored[key].dump() + ", regenerated " + value.dump());
    }
  }
  for (const auto& [key, value] : stored.items()) {
    if (!actual.contains(key)) {
      diverged.push_back({{"key", key}, {"expected", value}, {"actual", nullptr}});
      lines.push_back(key + ": golden has no regenerated counterpart");
    }
  }
  lines.insert(lines.begin(), "fixtures: " + std::to_string(actual.size()) + " checked, " +
                                  std::to_string(diverged.size()) + " diverged (" + file + ")");
  r.payload = {{"file", file}, {"checked", actual.size()}, {"written", false}, {"diverged", diverged}};
  r.text = std::move(lines);
  if (!diverged.empty()) r.status = Status::Diverged;
}

}  // namespace

int CommandResult::exit_code() const noexcept {
  if (help) return 0;
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::DomainError:
    case Status::Diverged:
      return 1;
    case Status::UsageError:
      return 2;
  }
  return 1;
}

std::string default_fixture_dir() { return SLOPEKIT_DEFAULT_FIXTURE_DIR; }

CommandResult run(const std::vector<std::string>& args, const Environment& env) {
  CommandResult result;

  CLI::App app{"Slopes, Farey paths and tightness certificates on T^2.", "slopekit"};
  app.require_subcommand(1);
  app.footer(kGrammar);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet,-q", result.quiet, "Suppress standard output");

  auto sub = [](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::function<void()> action;
  std::string a, b;
  std::vector<std::string> parts;

  auto* farey = sub(&app, "farey", "Farey graph queries");
  farey->require_subcommand(1);
  auto* farey_path_app = sub(farey, "path", "Shortest Farey path between two slopes");
  farey_path_app->add_option("from", a)->required();
  farey_path_app->add_option("to", b)->required();
  farey_path_app->callback([&] {
    result.command = "farey path";
    action = [&] { farey_path_cmd(result, a, b); };
  });
  auto* farey_adj_app = sub(farey, "adjacent", "Farey adjacency of two slopes");
  farey_adj_app->add_option("a", a)->required();
  farey_adj_app->add_option("b", b)->required();
  farey_adj_app->callback([&] {
    result.command = "farey adjacent";
    action = [&] { farey_adjacent_cmd(result, a, b); };
  });

  auto* euler = sub(&app, "euler", "Relative Euler class of a slice path");
  euler->add_option("path", parts, "\"s0,s1,... ; +-...\"")->required();
  euler->callback([&] {
    result.command = "euler";
    action = [&] { euler_cmd(result, join(parts, " ")); };
  });

  std::optional<std::size_t> interface;
  auto* mixed = sub(&app, "mixed", "Mixed-torus detection");
  mixed->add_option("path", parts, "\"s0,s1,... ; +-...\"")->required();
  mixed->add_option("--interface", interface, "Interface index (1 .. slices-1)");
  mixed->callback([&] {
    result.command = "mixed";
    action = [&] { mixed_cmd(result, join(parts, " "), interface); };
  });

  auto* count = sub(&app, "count-tight", "Tight structures on a solid torus");
  count->add_option("slope", a)->required();
  count->callback([&] {
    result.command = "count-tight";
    action = [&] { count_tight_cmd(result, a); };
  });

  Int s2 = 0;
  auto* split = sub(&app, "split", "Tight splitting slopes along a mixed torus");
  split->add_option("--s2", s2, "Integer dividing slope s2 (s0 = -1, s1 = inf)")->required();
  split->callback([&] {
    result.command = "split";
    action = [&] { split_cmd(result, s2); };
  });

  Int lo = 0, hi = 0;
  auto* table = sub(&app, "surgery-table", "Meridian classification table");
  table->add_option("--min", lo)->required();
  table->add_option("--max", hi)->required();
  table->callback([&] {
    result.command = "surgery-table";
    action = [&] { surgery_table_cmd(result, lo, hi); };
  });

  std::string table_path, target, budget, pool, ends;
  Int max_intermediate = 3;
  auto* orbits = sub(&app, "orbits", "Reeb orbit bookkeeping");
  orbits->require_subcommand(1);
  auto* feasible = sub(orbits, "feasible", "Buildings over a pool with given homology");
  feasible->add_option("--target", target, "\"(x,y)\"")->required();
  feasible->add_option("--budget", budget, "Strict action bound p/q");
  feasible->add_option("--pool", pool, "Comma-separated orbit names")->required();
  feasible->add_option("--table", table_path, "Orbit table file");
  feasible->callback([&] {
    result.command = "orbits feasible";
    action = [&] { orbits_feasible_cmd(result, table_path, target, budget, pool); };
  });
  auto* scan = sub(orbits, "scan", "Two-level breakings of a curve");
  scan->add_option("--ends", ends, "Comma-separated positive ends");
  scan->add_option("--pool", pool, "Comma-separated intermediate orbit pool");
  scan->add_option("--max-intermediate", max_intermediate, "Size cap for reported candidates");
  scan->add_option("--table", table_path, "Orbit table file");
  scan->callback([&] {
    result.command = "orbits scan";
    action = [&] { orbits_scan_cmd(result, table_path, ends, pool, max_intermediate); };
  });
  auto* show = sub(orbits, "table", "Print the orbit table");
  show->add_option("--table", table_path, "Orbit table file");
  show->callback([&] {
    result.command = "orbits table";
    action = [&] { orbits_table_cmd(result, table_path); };
  });

  std::string dir;
  bool update = false;
  auto* fixtures = sub(&app, "fixtures", "Regenerate quoted values and diff against goldens");
  fixtures->add_option("--dir", dir, "Fixture directory (default: $SLOPEKIT_FIXTURE_DIR or built-in)");
  fixtures->add_flag("--update", update, "Rewrite the goldens");
  fixtures->callback([&] {
    result.command = "fixtures";
    action = [&] { fixtures_cmd(result, env, dir, update); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.help = true;
    result.message = out.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.help = true;
    result.message = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::UsageError;
    result.message = std::string("error: ") + e.what() + "\n" + kGrammar;
    return result;
  }
  result.json = format == "json";

  try {
    action();
  } catch (const DomainError& e) {
    // Malformed slope, class or table text is a grammar violation.
    result.status = e.code() == ErrorCode::ParseError ? Status::UsageError : Status::DomainError;
    result.error = std::string(e.name());
    result.message = e.what();
    if (result.status == Status::UsageError) result.message = std::string("error: ") + e.what() + "\n" + kGrammar;
    result.payload = Json::object();
    result.text.clear();
  } catch (const std::exception& e) {
    // I/O trouble (unreadable table file, unwritable fixture dir).
    result.status = Status::UsageError;
    result.message = std::string("error: ") + e.what() + "\n";
    result.payload = Json::object();
    result.text.clear();
  }
  return result;
}

Json to_json(const CommandResult& r) {
  Json j{{"schema", kSchemaVersion}, {"command", r.command}};
  switch (r.status) {
    case Status::Ok:
      j["status"] = "ok";
      j["result"] = r.payload;
      break;
    case Status::Diverged:
      j["status"] = "diverged";
      j["result"] = r.payload;
      break;
    case Status::DomainError:
      j["status"] = "error";
      j["error"] = {{"name", r.error}, {"message", r.message}};
      break;
    case Status::UsageError:
      j["status"] = "usage-error";
      j["error"] = {{"name", r.error.empty() ? "UsageError" : r.error}, {"message", r.message}};
      break;
  }
  return j;
}

Rendered render(const CommandResult& r) {
  Rendered out;
  if (r.help) {
    out.out = r.message;
    return out;
  }
  if (r.status == Status::UsageError) {
    out.err = r.message;
    if (!out.err.empty() && out.err.back() != '\n') out.err += '\n';
    return out;
  }
  if (r.status == Status::DomainError) out.err = "error: " + r.message + "\n";
  if (r.status == Status::Diverged) out.err = "fixtures diverged from goldens\n";
  if (r.quiet) return out;
  if (r.json) {
    out.out = to_json(r).dump(2) + "\n";
  } else {
    for (const auto& line : r.text) out.out += line + "\n";
  }
  return out;
}

}  // namespace slopekit::cli
