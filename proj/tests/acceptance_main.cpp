// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.  --fast skips the PDE-backed criteria.
#include <cstring>
#include <iostream>

#include "abtk/verify.hpp"

int main(int argc, char** argv) {
  bool fast = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) fast = true;
  const auto results = abtk::run_acceptance(fast, 0, "acceptance_scratch");
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
              << r.name << " -- " << r.details << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance: all criteria passed\n"
                    : "acceptance: FAILURES present\n");
  return all ? 0 : 1;
}
