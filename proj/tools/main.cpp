#include <iostream>
#include <string>
#include <vector>

#include "ipc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ipc::cli::run(std::move(args), std::cout, std::cerr);
}
