#include <iostream>

#include "escalade/cli.hpp"

int main(int argc, char** argv) {
  return escalade::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
