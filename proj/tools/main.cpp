#include <string>
#include <vector>

#include "ssdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ssdual::run_cli(args);
}
