// The ship gate: every acceptance criterion in-process, one PASS/FAIL line
// each, then the byte-determinism criterion against the real binary (two
// consecutive `cobar selftest` runs compared byte for byte). Exit 0 only
// when everything passes.

#include <cstdio>
#include <iostream>
#include <string>

#include "cobar/acceptance.hpp"

#ifndef COBAR_CLI_PATH
#error "COBAR_CLI_PATH must name the cobar binary"
#endif

namespace {

std::string capture_stdout(const std::string& command, int* status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  *status = pclose(pipe);
  return out;
}

}  // namespace

int main() {
  bool ok = cobar::run_acceptance(std::cout, std::cerr, {});

  const std::string cmd = std::string("'") + COBAR_CLI_PATH + "' selftest 2>/dev/null";
  int status1 = 0, status2 = 0;
  const std::string run1 = capture_stdout(cmd, &status1);
  const std::string run2 = capture_stdout(cmd, &status2);
  const bool det = status1 == 0 && status2 == 0 && !run1.empty() && run1 == run2;
  std::cout << (det ? "PASS" : "FAIL")
            << " 11 cli-determinism   two consecutive selftest runs print identical bytes\n";
  if (!det)
    std::cerr << "selftest runs: exit " << status1 << " and " << status2 << ", "
              << run1.size() << " and " << run2.size() << " bytes\n";
  return (ok && det) ? 0 : 1;
}
