#include <string>
#include <vector>

#include "respan/cli.hpp"

int main(int argc, char** argv) {
  return respan::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
