#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobar/cover.hpp"
#include "cobar/necklace.hpp"
#include "cobar/pi1.hpp"

using namespace cobar;

namespace {
const Ring Z = Ring::integers();
}

// The OpenMP kernels must reproduce the serial reference byte for byte:
// slots are merged in index order, so reports and invariants are identical.

TEST_CASE("verification sweeps agree across execution modes") {
  const DgCoalgebra c(builtin("torus"), Z);
  CHECK(c.check_coalgebra(ExecMode::Serial) == c.check_coalgebra(ExecMode::Parallel));
  CHECK(c.complex().validate_differential(ExecMode::Serial) ==
        c.complex().validate_differential(ExecMode::Parallel));

  const CobarAlgebra om(DgCoalgebra(builtin("klein"), Z));
  CHECK(om.check_differential_squared(3, 4, ExecMode::Serial) ==
        om.check_differential_squared(3, 4, ExecMode::Parallel));
  CHECK(om.check_structure(2, 4, ExecMode::Serial) ==
        om.check_structure(2, 4, ExecMode::Parallel));

  const LoopBialgebra lb(DgCoalgebra(builtin("rp2"), Z));
  CHECK(lb.check_bialgebra(2, 4, ExecMode::Serial) ==
        lb.check_bialgebra(2, 4, ExecMode::Parallel));
  CHECK(lb.check_dictionary(2, 4, ExecMode::Serial) ==
        lb.check_dictionary(2, 4, ExecMode::Parallel));
}

TEST_CASE("homology and cover computations agree across execution modes") {
  CHECK(loop_homology(builtin("sphere(2)"), Z, 4, ExecMode::Serial) ==
        loop_homology(builtin("sphere(2)"), Z, 4, ExecMode::Parallel));

  const GroupRealization rho(builtin("rp2"), cyclic_group(2), {1});
  CHECK(check_twisted_complex(rho, Z, ExecMode::Serial) ==
        check_twisted_complex(rho, Z, ExecMode::Parallel));
  CHECK(cover_homology(rho, Z, 2, ExecMode::Serial) ==
        cover_homology(rho, Z, 2, ExecMode::Parallel));

  CHECK(check_rigidification(3, 0, 3, Z, Fault::None, ExecMode::Serial) ==
        check_rigidification(3, 0, 3, Z, Fault::None, ExecMode::Parallel));
}

TEST_CASE("injected faults report the same witness in both modes") {
  const DgCoalgebra c(builtin("rp2"), Z, Fault::AwSign);
  const Report serial = c.check_coalgebra(ExecMode::Serial);
  CHECK(!serial.all_pass());
  CHECK(serial == c.check_coalgebra(ExecMode::Parallel));
}

TEST_CASE("worker counts are sane") {
  CHECK(worker_count(ExecMode::Serial) == 1);
  CHECK(worker_count(ExecMode::Parallel) >= 1);
}
