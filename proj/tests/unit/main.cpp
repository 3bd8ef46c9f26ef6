#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t fixtures::seed() { return g_seed; }

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TROPJAC_SEED")) g_seed = std::stoull(env);
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0)
      g_seed = std::stoull(argv[i] + 7);
    else
      rest.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
