#pragma once

#include <string>
#include <vector>

#include "cobar/matrix.hpp"
#include "cobar/parallel.hpp"
#include "cobar/report.hpp"

namespace cobar {

// Isomorphism type of a finitely generated module over the session ring:
// free rank plus torsion coefficients in divisibility order (Z only; fields
// never produce torsion).
struct AbelianGroupInvariants {
  long free_rank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const AbelianGroupInvariants&) const = default;
  std::string to_string() const;
};

// Nonnegatively graded free complex with labeled bases.
// diff[n] maps C_n -> C_{n-1}; diff[0] has zero rows.
struct ChainComplex {
  explicit ChainComplex(Ring r) : ring(r) {}

  Ring ring;
  std::vector<std::vector<std::string>> basis;
  std::vector<SparseMatrix> diff;

  int top_dim() const { return static_cast<int>(basis.size()) - 1; }
  int dim(int n) const {
    return (n >= 0 && n <= top_dim()) ? static_cast<int>(basis[n].size()) : 0;
  }
  // diff[n] when present, otherwise a correctly shaped zero matrix.
  SparseMatrix differential_at(int n) const;

  // d_n . d_{n+1} == 0 for every degree, with the offending basis element named.
  Report validate_differential(ExecMode mode = ExecMode::Serial) const;
};

// Homology in degree n. Throws validation_error when d^2 != 0, naming a witness.
AbelianGroupInvariants homology(const ChainComplex& c, int n);

// Homology in degrees 0..n_max; degrees are independent, so the sweep takes an
// execution mode.
std::vector<AbelianGroupInvariants> homology_range(const ChainComplex& c, int n_max,
                                                   ExecMode mode = ExecMode::Serial);

}  // namespace cobar
