#include <iostream>
#include <string>
#include <vector>

#include <catalan_zeta/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return catalan_zeta::run_cli(std::move(args), std::cout, std::cerr);
}
