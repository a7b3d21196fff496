#pragma once

// Rigidification cross-checks. Two models of the mapping space between
// vertices of a simplex: the nerve of the subset poset, and a complex of
// cubes indexed by necklace joints. A staircase triangulation compares the
// two, and the bead dictionary is checked against the colimit presentation
// of the loop algebra.

#include "cobar/loop_bialgebra.hpp"

namespace cobar {

// Nerve of the poset of subsets of {i..j} containing both endpoints: the
// mapping space from i to j of the rigidified n-simplex. Generators in
// dimension k are strict chains of k+1 subsets, named like "03<013<0123".
// Requires 0 <= i <= j <= n <= 8. Cell production is capped by the
// COBAR_MAX_CELLS environment variable (default 200000).
SimplicialSetPresentation lurie_mapping_space(int n, int i, int j);

// One cube cell per pair of vertex sets J <= V: J the joints of a necklace,
// V everything it visits, one cube direction per free vertex in V \ J.
struct CubeCell {
  unsigned joints = 0, visited = 0;  // bit v set = vertex v present

  auto operator<=>(const CubeCell&) const = default;
  int dim() const;
  std::string show() const;  // "03|013"
};

// All cells grouped by dimension, deterministic order; same cap as above.
std::vector<std::vector<CubeCell>> necklace_cube_cells(int n, int i, int j);

// Chain complex of the cube model. Orientation: d = sum over free vertices
// (ascending, 1-based k) of (-1)^k (drop the vertex from V - add it to J),
// chosen so that the staircase triangulation below is a chain map.
ChainComplex necklace_cube_complex(int n, int i, int j, Ring ring);

// Staircase triangulation of one cube cell inside the nerve: a signed sum of
// subset flags, one per insertion order of the free vertices. Fault EzSign
// drops the permutation signs.
Chain ez_shuffle_chain(const SimplicialSetPresentation& nerve, Ring ring, const CubeCell& cell,
                       Fault fault = Fault::None);

// Compares the two models of the (i,j) mapping space of the n-simplex:
// validity of both complexes, the staircase chain map property, and equality
// of homology (these spaces are contractible, so both sides must be points).
Report check_rigidification(int n, int i, int j, Ring ring, Fault fault = Fault::None,
                            ExecMode mode = ExecMode::Serial);

// Colimit consistency of the bead dictionary for a reduced presentation:
// nondegenerate bead words transform by a chain map, bead words with a
// degenerate bead have vanishing normalized boundary, and the cube boundary
// obeys the concatenation Leibniz rule. Sweeps words of cube dimension at
// most max_cube_dim with at most two beads per word.
Report check_loop_model(const LoopBialgebra& lb, int max_cube_dim);

// Every bead word mapping into S with the given endpoints: beads are formal
// simplices of dimension >= 1 (degenerate ones included), consecutive beads
// glued last vertex to first vertex. Exhaustive within the bounds, ordered by
// bead count then lexicographically; capped by COBAR_MAX_CELLS.
std::vector<RawNecklace> enumerate_necklace_maps(const SimplicialSetPresentation& S, GenRef x,
                                                 GenRef y, int max_beads = 4,
                                                 int max_total_dim = 4);

// Canonical simplex of the mapping space presented as a colimit of cubes over
// necklaces: a nondegenerate bead word together with a strict flag of
// direction sets from empty to full. The word's joints realize the bottom of
// the flag; faces that leave this normal form are renormalized by splitting
// beads (new joints) or taking inner bead faces (vertices dropped).
struct ColimitCell {
  std::vector<FormalSimplex> beads;
  std::vector<unsigned> flag;  // cumulative direction masks, bit d-1 = direction d

  auto operator<=>(const ColimitCell&) const = default;
  int dim() const { return static_cast<int>(flag.size()) - 1; }
};

using ColimitChain = FormalSum<ColimitCell>;

// Staircase chain of the top cube cell of a bead word: the signed sum over
// all insertion orders of its directions. The unit word gives the identity
// vertex of the mapping space.
ColimitChain colimit_ez_chain(const SimplicialSetPresentation& S, Ring ring,
                              const CobarMonomial& m);

// Alternating sum of flag deletions, renormalized cell by cell. Deleting the
// bottom splits the word at the first flag step; deleting the top takes inner
// bead faces at the dropped vertices.
ColimitChain colimit_boundary(const SimplicialSetPresentation& S, Ring ring,
                              const ColimitCell& cell);

// Concatenation of mapping spaces on staircase chains: words concatenate and
// flags interleave with shuffle signs.
ColimitChain colimit_product(const SimplicialSetPresentation& S, const ColimitChain& a,
                             const ColimitChain& b);

std::string show_colimit_cell(const SimplicialSetPresentation& S, const ColimitCell& cell);

// Dimension-wise generator bijection commuting with all faces, found by
// backtracking. Intended for small presentations; throws bound_error when the
// search space exceeds the cell cap.
bool presentations_isomorphic(const SimplicialSetPresentation& A,
                              const SimplicialSetPresentation& B);

// Full dictionary verification for a reduced presentation: the three loop
// model items above, multiplicativity of the staircase chains under
// concatenation, compatibility of their simplicial boundary with the cube
// boundary (the mapping space orients cube directions visited-to-joint, the
// loop algebra differential the opposite way; the comparison carries that
// sign), and membership of every staircase cell among the enumerated
// necklace maps.
Report check_phi_algebra_map(const SimplicialSetPresentation& S, Ring ring, int max_cube_dim);

}  // namespace cobar
