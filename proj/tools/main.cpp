#include <unistd.h>

#include <cstdlib>
#include <exception>
#include <iostream>

#include "cartan/cli.hpp"

int main(int argc, char** argv) {
  cartan::CliOptions options;
  options.color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  try {
    return cartan::run_cli(argc, argv, std::cout, std::cerr, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
