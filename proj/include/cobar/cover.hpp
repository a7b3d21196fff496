#pragma once

// Homology of a finite regular cover through a twisted tensor product: chains
// of the base with coefficients in the group algebra, differential twisted by
// an edge labeling of the deck group.

#include "cobar/chains.hpp"
#include "cobar/groups.hpp"

namespace cobar {

// A labeling of the nondegenerate edges of a reduced presentation by elements
// of a finite group, multiplicative on 2-simplices: g(d2) g(d0) = g(d1) with
// degenerate faces reading as the identity. This is the data of a group map
// from the fundamental group, hence of a regular cover.
class GroupRealization {
 public:
  // edge_to_group[i] indexes into G for edge generator i. Validates the
  // relation on every 2-simplex and throws validation_error on failure.
  GroupRealization(SimplicialSetPresentation S, FiniteGroupTable G,
                   std::vector<int> edge_to_group);

  const SimplicialSetPresentation& space() const { return S_; }
  const FiniteGroupTable& group() const { return G_; }
  int edge_label(int edge_idx) const { return edge_to_group_[edge_idx]; }
  // identity for degenerate edges
  int label(const FormalSimplex& edge) const;

 private:
  SimplicialSetPresentation S_;
  FiniteGroupTable G_;
  std::vector<int> edge_to_group_;
};

// Chains of the cover: basis pairs (nondegenerate n-simplex, group element).
// The differential keeps the untwisted boundary and twists the last face:
//   d(s (x) g) = sum_i (-1)^i d_i s (x) g  for i < n,  plus
//                (-1)^n d_n s (x) gbar(last edge of s) g,
// equivalently d = untwisted + (-1)^n front (x) (gbar - 1) g on the top face.
ChainComplex twisted_complex(const GroupRealization& rho, Ring ring);

// homology_range of the twisted complex, with d^2 = 0 verified first.
std::vector<AbelianGroupInvariants> cover_homology(const GroupRealization& rho, Ring ring,
                                                   int max_degree,
                                                   ExecMode mode = ExecMode::Serial);

// Machine checks: d^2 = 0 on every basis pair, and collapsing the group
// algebra along g -> 1 turns the twisted differential into the untwisted
// boundary, basis element by basis element.
Report check_twisted_complex(const GroupRealization& rho, Ring ring,
                             ExecMode mode = ExecMode::Serial);

}  // namespace cobar
