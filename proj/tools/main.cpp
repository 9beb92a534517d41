#include <iostream>
#include <string>
#include <vector>

#include "tupletfrob/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto env = tupletfrob::cli::run(args);
  std::cout << env.out;
  std::cerr << env.err;
  return env.exit_code;
}
