#pragma once

// Fundamental group of a connected presentation through the edge-path
// construction, plus the degree zero loop algebra layer: the shifted-letter
// dictionary and group-likes with antipode on finite group algebras.

#include "cobar/groups.hpp"
#include "cobar/loop_bialgebra.hpp"

namespace cobar {

// Edge-path presentation: one generator per nondegenerate edge outside a
// breadth-first spanning tree of the vertex graph, one relation
// g(d2) g(d0) g(d1)^-1 per nondegenerate 2-simplex; tree and degenerate
// edges read as the identity. Throws input_error when the vertex graph is
// not connected.
GroupPresentation pi1_presentation(const SimplicialSetPresentation& S);

// pi1_presentation followed by Tietze reduction.
GroupPresentation fundamental_group(const SimplicialSetPresentation& S);

// For every nondegenerate 2-simplex tau of a reduced presentation, checks in
// the loop algebra that D[tau] = s(d1 tau) - s(d2 tau) s(d0 tau), where
// s(e) = 1 + [e] for a nondegenerate edge and s = 1 for a degenerate one.
// This identity is what turns 2-simplices into group relations among the
// degree zero group-likes.
Report shift_consistency(const SimplicialSetPresentation& S, Ring ring);

// Group-like elements of the group algebra over an integral domain: exactly
// the group elements. Returns their names; the optional report records the
// machine checks behind that answer.
std::vector<std::string> grouplike_elements(const FiniteGroupTable& G, Ring ring,
                                            Report* report = nullptr);

// Antipode g -> g^-1 on the group algebra: antihomomorphism property, the
// defining identity m(S (x) id)Delta = unit . counit and its mirror, checked
// on the basis and on a dense probe element.
Report antipode_check(const FiniteGroupTable& G, Ring ring);

}  // namespace cobar
