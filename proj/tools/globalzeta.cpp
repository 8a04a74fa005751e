#include <iostream>
#include <string>
#include <vector>

#include "cli_frontend.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gz::cli::parse_and_dispatch(args, std::cout, std::cerr);
}
