#include <iostream>

#include "umst/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return umst::cli::dispatch(std::move(args), std::cout, std::cerr);
}
