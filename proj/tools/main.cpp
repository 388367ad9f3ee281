#include <iostream>
#include <vector>

#include "exgeo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = exgeo::dispatch(args);
  std::cout << exgeo::emit_report(result, result.format);
  return result.exit_code;
}
