#include "cobar/cover.hpp"

#include <utility>

namespace cobar {

GroupRealization::GroupRealization(SimplicialSetPresentation S, FiniteGroupTable G,
                                   std::vector<int> edge_to_group)
    : S_(std::move(S)), G_(std::move(G)), edge_to_group_(std::move(edge_to_group)) {
  const Report v = S_.validate();
  if (!v.all_pass())
    throw validation_error("invalid simplicial set presentation: " + v.first_failure()->name);
  if (!S_.is_reduced())
    throw input_error("group realizations need a reduced presentation");
  const Report gv = G_.validate();
  if (!gv.all_pass())
    throw validation_error("invalid group table: " + gv.first_failure()->name);
  if (static_cast<int>(edge_to_group_.size()) != S_.count(1))
    throw input_error("one group element per nondegenerate edge required");
  for (int g : edge_to_group_)
    if (g < 0 || g >= G_.order()) throw input_error("edge label outside the group");

  // multiplicativity across triangles is exactly the group map condition
  for (int t = 0; t < S_.count(2); ++t) {
    const FormalSimplex tau{{}, {2, t}};
    const int left = G_.mult[label(S_.face(tau, 2))][label(S_.face(tau, 0))];
    if (left != label(S_.face(tau, 1)))
      throw validation_error("edge labels are not multiplicative on 2-simplex " +
                             S_.show(GenRef{2, t}));
  }
}

int GroupRealization::label(const FormalSimplex& edge) const {
  if (edge.dim() != 1) throw validation_error("label asked for a non-edge");
  if (edge.is_degenerate()) return 0;
  return edge_to_group_[edge.gen.idx];
}

ChainComplex twisted_complex(const GroupRealization& rho, Ring ring) {
  const SimplicialSetPresentation& S = rho.space();
  const FiniteGroupTable& G = rho.group();
  const int n_elts = G.order();
  ChainComplex c(ring);

  for (int d = 0; d <= S.top_dim(); ++d) {
    std::vector<std::string> names;
    for (int i = 0; i < S.count(d); ++i)
      for (int g = 0; g < n_elts; ++g)
        names.push_back(S.show(GenRef{d, i}) + "@" + G.element_names[g]);
    c.basis.push_back(std::move(names));
  }

  c.diff.push_back(SparseMatrix(ring, 0, c.dim(0)));
  for (int d = 1; d <= S.top_dim(); ++d) {
    SparseMatrix m(ring, c.dim(d - 1), c.dim(d));
    for (int i = 0; i < S.count(d); ++i) {
      const FormalSimplex sigma{{}, {d, i}};
      // the deck action enters on the last face only, through the last edge
      const int twist = rho.label(S.back_face(sigma, 1));
      for (int g = 0; g < n_elts; ++g) {
        const int col = i * n_elts + g;
        Coefficient sign = Coefficient::one(ring);
        for (int k = 0; k <= d; ++k) {
          const FormalSimplex f = S.face(sigma, k);
          if (!f.is_degenerate()) {
            const int h = (k == d) ? G.mult[twist][g] : g;
            m.add_to(f.gen.idx * n_elts + h, col, sign);
          }
          sign = -sign;
        }
      }
    }
    c.diff.push_back(std::move(m));
  }
  return c;
}

std::vector<AbelianGroupInvariants> cover_homology(const GroupRealization& rho, Ring ring,
                                                   int max_degree, ExecMode mode) {
  if (max_degree < 0) throw input_error("max_degree must be nonnegative");
  return homology_range(twisted_complex(rho, ring), max_degree, mode);
}

Report check_twisted_complex(const GroupRealization& rho, Ring ring, ExecMode mode) {
  const ChainComplex twisted = twisted_complex(rho, ring);
  Report r = twisted.validate_differential(mode);

  // collapsing every group coordinate onto the basepoint copy recovers the
  // untwisted boundary
  const ChainComplex plain = DgCoalgebra(rho.space(), ring).complex();
  const int n_elts = rho.group().order();
  bool ok = true;
  std::string witness;
  for (int d = 1; d <= plain.top_dim() && ok; ++d) {
    // one collapsed column per basis pair, each against the plain boundary
    std::vector<std::map<int, Coefficient>> collapsed(twisted.dim(d));
    for (const auto& [pos, coeff] : twisted.diff[d].entries()) {
      auto& column = collapsed[pos.second];
      const auto [it, fresh] = column.emplace(pos.first / n_elts, coeff);
      if (!fresh) it->second += coeff;
      if (it->second.is_zero()) column.erase(it);
    }
    std::vector<std::map<int, Coefficient>> expected(plain.dim(d));
    for (const auto& [pos, coeff] : plain.diff[d].entries())
      expected[pos.second].emplace(pos.first, coeff);
    for (int col = 0; col < twisted.dim(d) && ok; ++col)
      if (collapsed[col] != expected[col / n_elts]) {
        ok = false;
        witness = twisted.basis[d][col];
      }
  }
  r.add("group collapse turns the twisted boundary into the plain one", ok, witness);
  return r;
}

}  // namespace cobar
