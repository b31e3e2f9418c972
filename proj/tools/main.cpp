#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = slopekit::cli::run(args);
  const auto rendered = slopekit::cli::render(result);
  std::cout << rendered.out << std::flush;
  std::cerr << rendered.err << std::flush;
  return result.exit_code();
}
