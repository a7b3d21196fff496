#pragma once

#include <string>
#include <vector>

#include "cobar/chains.hpp"

namespace cobar {

// Word in the letters [g] for generators g of dimension >= 1. The empty word
// is the algebra unit. Degree of a letter is dim - 1, of a word the sum.
struct CobarMonomial {
  std::vector<GenRef> letters;
  auto operator<=>(const CobarMonomial&) const = default;
};

using CobarElement = FormalSum<CobarMonomial>;

int cobar_degree(const CobarMonomial& m);

// Tensor algebra on the desuspended positive-degree chains of a single-vertex
// presentation. The differential acts on a letter [g] by
//   D[g] = -[boundary g] + sum_{p=1}^{n-1} (-1)^p [front_p g | back_{n-p} g]
// (degenerate factors vanish) and extends as a derivation with the sign of
// the prefix degree. Words never get shorter under D, and D lowers degree
// by exactly one.
class CobarAlgebra {
 public:
  explicit CobarAlgebra(DgCoalgebra chains, Fault fault = Fault::None);

  const DgCoalgebra& chains() const { return chains_; }
  const SimplicialSetPresentation& space() const { return chains_.space(); }
  const Ring& ring() const { return chains_.ring(); }

  CobarElement unit() const;
  CobarElement letter(GenRef g) const;  // throws for dimension-0 generators
  CobarElement product(const CobarElement& a, const CobarElement& b) const;

  CobarElement differential(const CobarMonomial& m) const;
  CobarElement differential(const CobarElement& e) const;

  // Coefficient of the empty word; an algebra map to the ground ring.
  Coefficient augmentation(const CobarElement& e) const;

  // All words of the exact degree with at most max_word_length letters,
  // in lexicographic order on letter sequences.
  std::vector<CobarMonomial> basis(int degree, int max_word_length) const;

  // D^2 = 0 on every basis word of degree <= max_degree.
  Report check_differential_squared(int max_degree, int max_word_length,
                                    ExecMode mode = ExecMode::Serial) const;
  // Degree/filtration bookkeeping, augmentation laws, associativity and unit.
  Report check_structure(int max_degree, int max_word_length,
                         ExecMode mode = ExecMode::Serial) const;

  std::string show(const CobarMonomial& m) const;
  std::string show(const CobarElement& e) const;

 private:
  CobarElement letter_differential(GenRef g) const;

  DgCoalgebra chains_;
  Fault fault_;
  std::vector<GenRef> alphabet_;  // generators of dimension >= 1, in order
};

// Algebra map induced letterwise by a simplicial map between single-vertex
// presentations; letters with degenerate image are sent to zero.
class CobarMap {
 public:
  CobarMap(SimplicialMap f, Ring ring);

  const CobarAlgebra& source() const { return source_; }
  const CobarAlgebra& target() const { return target_; }

  CobarElement apply(const CobarMonomial& m) const;
  CobarElement apply(const CobarElement& e) const;

  // Commutes with D on a basis sweep and is multiplicative on word pairs.
  Report check(int max_degree, int max_word_length, ExecMode mode = ExecMode::Serial) const;

 private:
  SimplicialMap f_;
  CobarAlgebra source_;
  CobarAlgebra target_;
};

// Homology of the cobar construction in degrees 0..max_degree. Requires a
// presentation with one vertex and no 1-dimensional generators, so each
// degree has a finite word basis.
std::vector<AbelianGroupInvariants> loop_homology(const SimplicialSetPresentation& S, Ring ring,
                                                  int max_degree,
                                                  ExecMode mode = ExecMode::Serial);

}  // namespace cobar
