// Wall-clock comparison of the serial reference sweeps against the OpenMP
// kernels, on the workloads the acceptance gate actually runs. Results are
// printed as measured; on a single hardware thread the speedup is ~1x.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "cobar/necklace.hpp"

using namespace cobar;

namespace {

const Ring kZ = Ring::integers();

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::fixed << std::setprecision(3) << name << "\n  serial   " << serial
            << "s\n  parallel " << parallel << "s  (speedup "
            << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0) << "x)\n";
}

}  // namespace

int main() {
  std::cout << "workers available: " << worker_count(ExecMode::Parallel) << "\n";

  {
    const DgCoalgebra c(builtin("delta(3)"), kZ);
    row("coalgebra sweep, delta(3)",
        seconds([&] { c.check_coalgebra(ExecMode::Serial); }),
        seconds([&] { c.check_coalgebra(ExecMode::Parallel); }));
  }
  {
    const CobarAlgebra om(DgCoalgebra(builtin("torus"), kZ));
    row("cobar D^2, torus, degree 4, length 6",
        seconds([&] { om.check_differential_squared(4, 6, ExecMode::Serial); }),
        seconds([&] { om.check_differential_squared(4, 6, ExecMode::Parallel); }));
  }
  {
    // separate instances: the comultiplication memo would otherwise hand the
    // second run a warm cache
    const LoopBialgebra serial_lb(DgCoalgebra(builtin("rp2"), kZ));
    const LoopBialgebra parallel_lb(DgCoalgebra(builtin("rp2"), kZ));
    row("bialgebra axioms, rp2, degree 3, length 5",
        seconds([&] { serial_lb.check_bialgebra(3, 5, ExecMode::Serial); }),
        seconds([&] { parallel_lb.check_bialgebra(3, 5, ExecMode::Parallel); }));
  }
  {
    row("rigidification cross-check, map(4:0->4)",
        seconds([&] { check_rigidification(4, 0, 4, kZ, Fault::None, ExecMode::Serial); }),
        seconds([&] { check_rigidification(4, 0, 4, kZ, Fault::None, ExecMode::Parallel); }));
  }
  return 0;
}
