#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobar/cobar_algebra.hpp"

namespace cobar {

// Word of beads, each a formal simplex of dimension >= 1. Cells of the cube
// complex underlying the cobar construction: a bead of dimension t spans the
// t-1 directions of a cube factor, one per inner vertex. Degenerate beads are
// legitimate cells (degenerate cubes); they vanish only in normalized chains.
using RawNecklace = std::vector<FormalSimplex>;

using CobarTensor = FormalSum<std::pair<CobarMonomial, CobarMonomial>>;

int necklace_cube_dim(const RawNecklace& n);

// Face of the cube cell in the given direction (1-based). The 0-face is the
// inner simplicial face at that vertex of the owning bead; the 1-face splits
// the bead there. Total on raw words: composites must be taken raw first.
RawNecklace necklace_face(const SimplicialSetPresentation& S, const RawNecklace& n, int direction,
                          int epsilon);

// Normal form in normalized chains: degenerate edge beads are deleted (unit
// edges), a degenerate bead of dimension >= 2 kills the cell (nullopt).
std::optional<CobarMonomial> necklace_canonical(const RawNecklace& n);

RawNecklace necklace_of(const CobarMonomial& m);

// The comultiplication on the cobar construction of a single-vertex
// presentation, transported from the shuffle (Serre) diagonal of the cube
// complex through the bead dictionary phi. Together with concatenation this
// makes the cobar construction a dg bialgebra.
class LoopBialgebra {
 public:
  explicit LoopBialgebra(DgCoalgebra chains, Fault fault = Fault::None);

  const CobarAlgebra& algebra() const { return omega_; }
  const SimplicialSetPresentation& space() const { return omega_.space(); }
  const Ring& ring() const { return omega_.ring(); }

  // Alternating sum over directions of (1-face - 0-face), canonicalized.
  CobarElement cube_boundary(const CobarMonomial& m) const;

  // Bead dictionary: an edge bead contributes [e] + 1, a higher bead [s];
  // multiplicative over the word. Triangular with unit leading coefficient.
  CobarElement phi(const CobarMonomial& m) const;
  CobarElement phi(const CobarElement& e) const;
  CobarElement phi_inverse(const CobarMonomial& m) const;
  CobarElement phi_inverse(const CobarElement& e) const;

  // Shuffle diagonal of the cube cell: over direction partitions L|R, the
  // left factor takes 0-faces at L, the right factor 1-faces at R, signed by
  // the number of crossings between L and R.
  CobarTensor cube_coproduct(const CobarMonomial& m) const;

  // nabla = (phi (x) phi) . shuffle diagonal . phi^{-1}
  CobarTensor comultiplication(const CobarMonomial& m) const;
  CobarTensor comultiplication(const CobarElement& e) const;
  Coefficient counit(const CobarElement& e) const;

  // (D (x) id + Koszul id (x) D) on tensors; Koszul product on tensor pairs.
  CobarTensor tensor_differential(const CobarTensor& t) const;
  CobarTensor tensor_product(const CobarTensor& a, const CobarTensor& b) const;

  // phi intertwines the cube boundary with D, the cubical identities hold on
  // raw words, and phi / phi^{-1} invert each other, on a bounded sweep.
  Report check_dictionary(int max_degree, int max_word_length,
                          ExecMode mode = ExecMode::Serial) const;
  // Bialgebra axioms for (concatenation, nabla): chain map, coassociativity,
  // multiplicativity, counit laws, counit an algebra map, and group-likeness
  // of the shifted edge letters 1 + [e].
  Report check_bialgebra(int max_degree, int max_word_length,
                         ExecMode mode = ExecMode::Serial) const;

  std::string show(const CobarTensor& t) const;

 private:
  CobarElement phi_inverse_cached(const CobarMonomial& m) const;
  // Memoised comultiplication. Returns a reference to the map node, which
  // std::map keeps stable under later insertions; nothing is ever erased.
  const CobarTensor& nabla_cached(const CobarMonomial& m) const;

  CobarAlgebra omega_;
  Fault fault_;
  mutable std::map<CobarMonomial, CobarElement> inverse_memo_;
  mutable std::map<CobarMonomial, CobarTensor> nabla_memo_;
  mutable std::mutex memo_lock_;
};

}  // namespace cobar
