#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "weilsurf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return weilsurf::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return weilsurf::cli::kAnomalies;
  }
}
