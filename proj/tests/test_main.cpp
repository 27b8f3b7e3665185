#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {
std::uint32_t g_seed = 20240611;
}

namespace testing_support {
std::uint32_t seed() { return g_seed; }
}  // namespace testing_support

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = static_cast<std::uint32_t>(std::stoul(argv[++i]));
      continue;
    }
    rest.push_back(argv[i]);
  }
  if (const char* s = std::getenv("MBFUN_SEED")) g_seed = static_cast<std::uint32_t>(std::stoul(s));
  doctest::Context ctx;
  ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
