#include <iostream>

#include "indcert/cli.hpp"

int main(int argc, char** argv) {
  return indcert::cli::main({argv + 1, argv + argc}, std::cout, std::cerr);
}
