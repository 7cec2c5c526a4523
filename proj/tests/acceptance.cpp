// Runs the nine acceptance checks and prints one PASS/FAIL line per check.
// Exit status is nonzero if any check fails.

#include <iostream>

#include "nearring/checks.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failed = 0;
  for (const auto& c : nearring::acceptance_checks()) {
    const nearring::CheckRun run = nearring::run_check(c);
    nearring::print_check_run(std::cout, run, verbose || !run.outcome.pass);
    std::cout.flush();
    failed += !run.outcome.pass;
  }
  std::cout << "ACCEPTANCE " << (failed ? "FAIL" : "PASS") << ' ' << (9 - failed) << "/9\n";
  return failed ? 1 : 0;
}
