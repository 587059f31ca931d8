#include <iostream>

#include "supertree/cli.hpp"

int main(int argc, char** argv) {
  return supertree::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
