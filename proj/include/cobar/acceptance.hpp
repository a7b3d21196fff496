#pragma once

// The ship gate: the library's core guarantees as named, numbered criteria
// with pinned bounds and wall-clock budgets. The selftest subcommand and the
// acceptance test binary both run this list; a build is green only when every
// criterion passes.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cobar/fault.hpp"
#include "cobar/parallel.hpp"
#include "cobar/report.hpp"

namespace cobar {

struct Criterion {
  int number = 0;
  std::string name;       // stable slug, usable as a filter
  std::string statement;  // one line of what must hold
  std::optional<double> budget_seconds;  // enforced: overruns fail the criterion
  std::function<Report(Fault, ExecMode)> run;
};

// All criteria in their fixed order.
const std::vector<Criterion>& acceptance_criteria();

struct AcceptanceOptions {
  std::string filter;  // keep criteria whose slug contains it, or whose number equals it
  Fault fault = Fault::None;
  ExecMode mode = ExecMode::Serial;
  bool verbose = false;  // also print every report item
};

// Runs the selected criteria: one PASS/FAIL line each plus a summary on
// `out`; timings go to `log` so that `out` stays byte-reproducible across
// runs. Returns true when every selected criterion passes. Throws
// input_error when the filter selects nothing.
bool run_acceptance(std::ostream& out, std::ostream& log, const AcceptanceOptions& opt = {});

}  // namespace cobar
