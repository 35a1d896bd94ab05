// Acceptance runner: executes every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstring>

#include "noetherlab/acceptance.hpp"

int main(int argc, char** argv) {
  bool full = true;
  unsigned seed = 20240917;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) full = false;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = static_cast<unsigned>(std::atol(argv[++i]));
  }

  auto results = nlab::run_acceptance(full, seed);
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    std::printf("%s criterion %2d: %-28s %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.wall_ms);
  }
  std::printf("%zu/%zu criteria passed (tier %s, seed %u)\n", results.size() - failures,
              results.size(), full ? "full" : "fast", seed);
  return failures ? 1 : 0;
}
