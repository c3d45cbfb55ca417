// Apache License, Version 2.0, refer to LICENSE.txt

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return mwcr::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
