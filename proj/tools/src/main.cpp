//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return knotsemi::cli::run(argc, argv, std::cout, std::cerr);
}
