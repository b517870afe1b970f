#include <cstdio>
#include <cstring>
#include <string>

#include "gammaft/acceptance.hpp"

// Standalone runner for the verification checklist; also reachable through
// `gammaft verify`. Prints one PASS/FAIL line per check and exits nonzero on
// any failure.
int main(int argc, char** argv) {
  using gammaft::acceptance::Tier;
  Tier tier = Tier::fast;
  double tol_floor = 0.0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) {
      const std::string v = argv[++i];
      if (v == "fast")
        tier = Tier::fast;
      else if (v == "slow")
        tier = Tier::slow;
      else if (v == "all")
        tier = Tier::all;
      else {
        std::fprintf(stderr, "unknown suite '%s'\n", v.c_str());
        return 2;
      }
    } else if (std::strcmp(argv[i], "--tol") == 0 && i + 1 < argc) {
      tol_floor = std::atof(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--suite fast|slow|all] [--tol floor]\n",
                   argv[0]);
      return 2;
    }
  }
  const auto results = gammaft::acceptance::run(tier, tol_floor);
  return gammaft::acceptance::report(results) == 0 ? 0 : 1;
}
