#include <iostream>
#include <string>
#include <vector>

#include "reflcat/cli/cli.hpp"

int main(int argc, char** argv) {
  return reflcat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
