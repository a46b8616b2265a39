#include <exception>
#include <iostream>

#include "qmull/cli.hpp"

int main(int argc, char** argv) {
  try {
    return qmull::cli::main(argc, argv, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
