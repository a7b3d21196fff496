#include "cobar/chains.hpp"

namespace cobar {

DgCoalgebra::DgCoalgebra(SimplicialSetPresentation S, Ring ring, Fault fault)
    : S_(std::move(S)), ring_(ring), fault_(fault), complex_(ring) {
  const Report v = S_.validate();
  if (!v.all_pass())
    throw validation_error("invalid simplicial set presentation: " +
                           v.first_failure()->name + " [" + v.first_failure()->witness + "]");
  for (int d = 0; d <= S_.top_dim(); ++d) {
    std::vector<std::string> names;
    for (int i = 0; i < S_.count(d); ++i) names.push_back(S_.generator({d, i}).id);
    complex_.basis.push_back(std::move(names));
  }
  complex_.diff.push_back(SparseMatrix(ring_, 0, S_.count(0)));
  for (int d = 1; d <= S_.top_dim(); ++d) {
    SparseMatrix m(ring_, S_.count(d - 1), S_.count(d));
    for (int i = 0; i < S_.count(d); ++i)
      for (const auto& [g, c] : boundary(GenRef{d, i}).terms()) m.add_to(g.idx, i, c);
    complex_.diff.push_back(std::move(m));
  }
}

Chain DgCoalgebra::boundary(GenRef g) const {
  Chain out(ring_);
  if (g.dim == 0) return out;
  const FormalSimplex self{{}, g};
  Coefficient sign = Coefficient::one(ring_);
  for (int i = 0; i <= g.dim; ++i) {
    const FormalSimplex f = S_.face(self, i);
    if (!f.is_degenerate()) out.add(f.gen, sign);
    sign = -sign;
  }
  return out;
}

Chain DgCoalgebra::boundary(const Chain& c) const {
  Chain out(ring_);
  for (const auto& [g, coef] : c.terms())
    for (const auto& [h, coef2] : boundary(g).terms()) out.add(h, coef * coef2);
  return out;
}

ChainTensor DgCoalgebra::coproduct(GenRef g) const {
  ChainTensor out(ring_);
  const FormalSimplex self{{}, g};
  for (int p = 0; p <= g.dim; ++p) {
    const FormalSimplex front = S_.front_face(self, p);
    const FormalSimplex back = S_.back_face(self, g.dim - p);
    if (front.is_degenerate() || back.is_degenerate()) continue;
    Coefficient c = Coefficient::one(ring_);
    if (fault_ == Fault::AwSign && p == 1) c = -c;
    out.add({front.gen, back.gen}, c);
  }
  return out;
}

ChainTensor DgCoalgebra::coproduct(const Chain& c) const {
  ChainTensor out(ring_);
  for (const auto& [g, coef] : c.terms())
    for (const auto& [pair, coef2] : coproduct(g).terms()) out.add(pair, coef * coef2);
  return out;
}

Coefficient DgCoalgebra::counit(const Chain& c) const {
  Coefficient out = Coefficient::zero(ring_);
  for (const auto& [g, coef] : c.terms())
    if (g.dim == 0) out += coef;
  return out;
}

std::string DgCoalgebra::show(const Chain& c) const {
  return c.to_string([&](const GenRef& g) { return S_.show(g); });
}

std::string DgCoalgebra::show(const ChainTensor& t) const {
  return t.to_string([&](const std::pair<GenRef, GenRef>& p) {
    return S_.show(p.first) + "(x)" + S_.show(p.second);
  });
}

Report DgCoalgebra::check_coalgebra(ExecMode mode) const {
  using Triple = std::tuple<GenRef, GenRef, GenRef>;
  std::vector<GenRef> all;
  for (int d = 0; d <= S_.top_dim(); ++d)
    for (int i = 0; i < S_.count(d); ++i) all.push_back({d, i});

  struct Slot {
    bool coassoc = true, coder = true, counit_l = true, counit_r = true;
    std::string witness;
  };
  std::vector<Slot> slots(all.size());

  for_each_slot(all.size(), mode, [&](std::size_t idx) {
    const GenRef g = all[idx];
    Slot& out = slots[idx];
    const ChainTensor cop = coproduct(g);

    // (Delta (x) id) Delta == (id (x) Delta) Delta
    FormalSum<Triple> lhs(ring_), rhs(ring_);
    for (const auto& [pair, c] : cop.terms()) {
      for (const auto& [pair2, c2] : coproduct(pair.first).terms())
        lhs.add({pair2.first, pair2.second, pair.second}, c * c2);
      for (const auto& [pair2, c2] : coproduct(pair.second).terms())
        rhs.add({pair.first, pair2.first, pair2.second}, c * c2);
    }
    if (!(lhs == rhs)) out.coassoc = false;

    // Delta d == (d (x) id + id (x) d) Delta, Koszul sign on the right factor
    ChainTensor want = coproduct(boundary(g));
    ChainTensor got(ring_);
    for (const auto& [pair, c] : cop.terms()) {
      for (const auto& [h, c2] : boundary(pair.first).terms())
        got.add({h, pair.second}, c * c2);
      Coefficient sign =
          pair.first.dim % 2 == 0 ? Coefficient::one(ring_) : -Coefficient::one(ring_);
      for (const auto& [h, c2] : boundary(pair.second).terms())
        got.add({pair.first, h}, c * c2 * sign);
    }
    if (!(want == got)) out.coder = false;

    // counit laws
    Chain left(ring_), right(ring_);
    for (const auto& [pair, c] : cop.terms()) {
      if (pair.first.dim == 0) left.add(pair.second, c);
      if (pair.second.dim == 0) right.add(pair.first, c);
    }
    if (!(left == chain_of(g))) out.counit_l = false;
    if (!(right == chain_of(g))) out.counit_r = false;

    if (!(out.coassoc && out.coder && out.counit_l && out.counit_r))
      out.witness = S_.show(g);
  });

  auto collect = [&](auto field, const std::string& name) {
    bool ok = true;
    std::string witness;
    for (const auto& s : slots)
      if (!(s.*field)) {
        ok = false;
        witness = s.witness;
        break;
      }
    return CheckItem{name, ok, witness};
  };
  Report r;
  r.items.push_back(collect(&Slot::coassoc, "coproduct coassociative"));
  r.items.push_back(collect(&Slot::coder, "coproduct is a coderivation against d"));
  r.items.push_back(collect(&Slot::counit_l, "left counit law"));
  r.items.push_back(collect(&Slot::counit_r, "right counit law"));
  return r;
}

}  // namespace cobar
