#include <iostream>

#include "edmn/cli/run.hpp"

int main(int argc, char** argv) {
  return edmn::cli::run_command_line(argc, argv, std::cout, std::cerr, std::cin);
}
