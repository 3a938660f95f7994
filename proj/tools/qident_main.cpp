#include <iostream>

#include "qident/cli.hpp"

int main(int argc, char** argv) {
  return qident::cli_main(argc, argv, std::cout, std::cerr);
}
