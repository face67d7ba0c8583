#include <iostream>
#include <string>
#include <vector>

#include "k2gr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k2gr::cli::run(args, std::cout);
}
