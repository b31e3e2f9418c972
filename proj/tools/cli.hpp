#pragma once

// Batch command-line surface over the slopekit modules. run() does all the
// work and returns the result as data; main() only prints it, which keeps the
// commands testable in-process.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace slopekit::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status {
  Ok,
  DomainError,  // a library error; `error` holds its name verbatim
  UsageError,   // argv did not match the grammar
  Diverged,     // `fixtures` found values that differ from the goldens
};

struct CommandResult {
  Status status = Status::Ok;
  std::string command;            // e.g. "farey path"
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> text;  // text rendering of the payload
  std::string error;              // error name for DomainError
  std::string message;            // human-readable detail / usage text
  bool help = false;              // --help was requested
  bool json = false;              // --format json
  bool quiet = false;

  int exit_code() const noexcept;
};

struct Environment {
  // Overrides the fixture directory; when unset, SLOPEKIT_FIXTURE_DIR from
  // the process environment is consulted, then the built-in default.
  std::optional<std::string> fixture_dir;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args, const Environment& env = {});

// What main() writes to stdout and stderr for a result. Both strings are
// empty or newline-terminated.
struct Rendered {
  std::string out;
  std::string err;
};
Rendered render(const CommandResult& result);

// The JSON document for a result (schema, command, status, result/error).
nlohmann::ordered_json to_json(const CommandResult& result);

// Every published reference value the library regenerates, keyed by a
// stable name.
nlohmann::ordered_json regenerate_fixtures();

std::string default_fixture_dir();

}  // namespace slopekit::cli
