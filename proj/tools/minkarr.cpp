#include <iostream>
#include <string>
#include <vector>

#include "minkarr/cli.hpp"

int main(int argc, char** argv) {
  return minkarr::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
