#include <string>
#include <vector>

#include "tilegap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tilegap::run_cli(args);
}
