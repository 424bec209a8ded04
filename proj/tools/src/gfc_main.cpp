#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gfc/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gfc::cli::Io io{std::cin, std::cout, std::cerr, std::nullopt, isatty(STDIN_FILENO) != 0};
  if (const char* mode = std::getenv("GFC_SCALAR")) io.scalar_env = mode;
  return gfc::cli::run(args, io);
}
