// Acceptance gate: one PASS/FAIL line per criterion; nonzero exit on any
// failure. Also reachable as `ksgen selftest`.
#include <iostream>

#include "ks/cli.hpp"

int main() {
  bool ok = ks::acceptance_suite(std::cout);
  return ok ? 0 : 1;
}
