#include <string>
#include <vector>

#include "podkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return podkit::cli_dispatch(args);
}
