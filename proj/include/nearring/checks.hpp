#pragma once

// The acceptance suite: nine end-to-end checks tying the predicates, the saturation
// oracle, the witness fixtures and the number-theory sweeps together. Used by
// `nearring check` and by the acceptance test binary.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "nearring/intpoly.hpp"

namespace nearring {

struct CheckOutcome {
  bool pass = true;
  std::vector<std::string> details;  ///< one line per sub-check

  /// Records a sub-check; a false `ok` fails the whole check.
  void expect(bool ok, const std::string& line);
};

struct AcceptanceCheck {
  int number;
  std::string key;
  std::string title;
  std::function<void(CheckOutcome&)> body;
};

const std::vector<AcceptanceCheck>& acceptance_checks();

/// Looks a check up by number ("3") or key ("x3-fixtures"); nullptr if unknown.
const AcceptanceCheck* find_check(const std::string& name);

struct CheckRun {
  const AcceptanceCheck* check = nullptr;
  CheckOutcome outcome;
  double seconds = 0;
};

CheckRun run_check(const AcceptanceCheck& c);

/// "CHECK <n> <key> PASS|FAIL (<seconds>s) <title>", followed by indented details when
/// `verbose` is set.
void print_check_run(std::ostream& os, const CheckRun& run, bool verbose);

/// Degree uniform in [0, max_degree], coefficients uniform in [-max_abs, max_abs].
IntPoly random_poly(std::mt19937_64& rng, std::size_t max_degree, long max_abs);

}  // namespace nearring
