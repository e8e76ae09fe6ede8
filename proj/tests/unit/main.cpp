#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "support.hpp"

int main(int argc, char** argv) {
  std::uint64_t s = fct::parse_seed(argc, argv);
  std::cout << "seed: " << s << "\n";
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
