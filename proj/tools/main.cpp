#include <vector>

#include "topecycle/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return topecycle::cli_run(args);
}
