#include "cobar/loop_bialgebra.hpp"

#include <tuple>
#include <utility>

namespace cobar {

int necklace_cube_dim(const RawNecklace& n) {
  int d = 0;
  for (const FormalSimplex& b : n) d += b.dim() - 1;
  return d;
}

RawNecklace necklace_of(const CobarMonomial& m) {
  RawNecklace out;
  out.reserve(m.letters.size());
  for (const GenRef& g : m.letters) out.push_back(FormalSimplex{{}, g});
  return out;
}

namespace {
// direction (1-based) -> owning bead and inner vertex 1..dim-1
std::pair<std::size_t, int> locate(const RawNecklace& n, int direction) {
  int remaining = direction;
  for (std::size_t b = 0; b < n.size(); ++b) {
    const int span = n[b].dim() - 1;
    if (remaining <= span) return {b, remaining};
    remaining -= span;
  }
  throw validation_error("cube direction out of range");
}
}  // namespace

RawNecklace necklace_face(const SimplicialSetPresentation& S, const RawNecklace& n, int direction,
                          int epsilon) {
  if (direction < 1 || direction > necklace_cube_dim(n))
    throw validation_error("cube direction out of range");
  if (epsilon != 0 && epsilon != 1) throw validation_error("cube face sign must be 0 or 1");
  const auto [b, v] = locate(n, direction);
  RawNecklace out;
  out.reserve(n.size() + 1);
  for (std::size_t i = 0; i < b; ++i) out.push_back(n[i]);
  if (epsilon == 0) {
    out.push_back(S.face(n[b], v));
  } else {
    out.push_back(S.front_face(n[b], v));
    out.push_back(S.back_face(n[b], n[b].dim() - v));
  }
  for (std::size_t i = b + 1; i < n.size(); ++i) out.push_back(n[i]);
  return out;
}

std::optional<CobarMonomial> necklace_canonical(const RawNecklace& n) {
  CobarMonomial m;
  for (const FormalSimplex& b : n) {
    if (b.is_degenerate()) {
      if (b.dim() >= 2) return std::nullopt;  // degenerate cube direction
      continue;                               // unit edge bead
    }
    m.letters.push_back(b.gen);
  }
  return m;
}

LoopBialgebra::LoopBialgebra(DgCoalgebra chains, Fault fault)
    : omega_(std::move(chains), fault == Fault::CobarLeibniz ? fault : Fault::None),
      fault_(fault) {}

CobarElement LoopBialgebra::cube_boundary(const CobarMonomial& m) const {
  CobarElement out(ring());
  const RawNecklace raw = necklace_of(m);
  const int n = necklace_cube_dim(raw);
  Coefficient sign = Coefficient::one(ring());
  for (int j = 1; j <= n; ++j) {
    sign = -sign;  // (-1)^j
    if (auto c1 = necklace_canonical(necklace_face(space(), raw, j, 1))) out.add(*c1, sign);
    if (auto c0 = necklace_canonical(necklace_face(space(), raw, j, 0))) out.add(*c0, -sign);
  }
  return out;
}

CobarElement LoopBialgebra::phi(const CobarMonomial& m) const {
  CobarElement out = omega_.unit();
  for (const GenRef& g : m.letters) {
    CobarElement factor = omega_.letter(g);
    if (g.dim == 1) factor += omega_.unit();
    out = omega_.product(out, factor);
  }
  return out;
}

CobarElement LoopBialgebra::phi(const CobarElement& e) const {
  CobarElement out(ring());
  for (const auto& [m, c] : e.terms())
    for (const auto& [w, c2] : phi(m).terms()) out.add(w, c * c2);
  return out;
}

CobarElement LoopBialgebra::phi_inverse_cached(const CobarMonomial& m) const {
  {
    std::lock_guard<std::mutex> hold(memo_lock_);
    auto it = inverse_memo_.find(m);
    if (it != inverse_memo_.end()) return it->second;
  }
  CobarElement out = CobarElement::single(ring(), m);
  for (const auto& [w, c] : phi(m).terms()) {
    if (w == m) continue;  // unit leading coefficient
    for (const auto& [u, c2] : phi_inverse_cached(w).terms()) out.add(u, -(c * c2));
  }
  {
    std::lock_guard<std::mutex> hold(memo_lock_);
    inverse_memo_.emplace(m, out);
  }
  return out;
}

CobarElement LoopBialgebra::phi_inverse(const CobarMonomial& m) const {
  return phi_inverse_cached(m);
}

CobarElement LoopBialgebra::phi_inverse(const CobarElement& e) const {
  CobarElement out(ring());
  for (const auto& [m, c] : e.terms())
    for (const auto& [w, c2] : phi_inverse_cached(m).terms()) out.add(w, c * c2);
  return out;
}

CobarTensor LoopBialgebra::cube_coproduct(const CobarMonomial& m) const {
  CobarTensor out(ring());
  const RawNecklace raw = necklace_of(m);
  const int n = necklace_cube_dim(raw);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // bit j-1 set: direction j in L (0-face on the left factor)
    RawNecklace left = raw, right = raw;
    for (int j = n; j >= 1; --j) {
      if (mask & (1u << (j - 1)))
        left = necklace_face(space(), left, j, 0);
      else
        right = necklace_face(space(), right, j, 1);
    }
    const auto cl = necklace_canonical(left);
    const auto cr = necklace_canonical(right);
    if (!cl || !cr) continue;
    int crossings = 0;
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        if ((mask & (1u << (k - 1))) && !(mask & (1u << (l - 1)))) ++crossings;
    bool negative = crossings % 2 != 0;
    if (fault_ == Fault::NablaShuffle && mask != 0) negative = !negative;
    out.add({*cl, *cr},
            negative ? -Coefficient::one(ring()) : Coefficient::one(ring()));
  }
  return out;
}

const CobarTensor& LoopBialgebra::nabla_cached(const CobarMonomial& m) const {
  {
    std::lock_guard<std::mutex> hold(memo_lock_);
    auto it = nabla_memo_.find(m);
    if (it != nabla_memo_.end()) return it->second;
  }
  CobarTensor out(ring());
  for (const auto& [w, cw] : phi_inverse_cached(m).terms())
    for (const auto& [pair, cd] : cube_coproduct(w).terms())
      for (const auto& [ml, cl] : phi(pair.first).terms())
        for (const auto& [mr, cr] : phi(pair.second).terms())
          out.add({ml, mr}, cw * cd * cl * cr);
  std::lock_guard<std::mutex> hold(memo_lock_);
  return nabla_memo_.emplace(m, std::move(out)).first->second;
}

CobarTensor LoopBialgebra::comultiplication(const CobarMonomial& m) const {
  return nabla_cached(m);
}

CobarTensor LoopBialgebra::comultiplication(const CobarElement& e) const {
  CobarTensor out(ring());
  for (const auto& [m, c] : e.terms())
    for (const auto& [pair, c2] : comultiplication(m).terms()) out.add(pair, c * c2);
  return out;
}

Coefficient LoopBialgebra::counit(const CobarElement& e) const { return omega_.augmentation(e); }

CobarTensor LoopBialgebra::tensor_differential(const CobarTensor& t) const {
  CobarTensor out(ring());
  for (const auto& [pair, c] : t.terms()) {
    for (const auto& [x, cx] : omega_.differential(pair.first).terms())
      out.add({x, pair.second}, c * cx);
    const Coefficient sign(ring(), cobar_degree(pair.first) % 2 == 0 ? 1 : -1);
    for (const auto& [y, cy] : omega_.differential(pair.second).terms())
      out.add({pair.first, y}, c * sign * cy);
  }
  return out;
}

CobarTensor LoopBialgebra::tensor_product(const CobarTensor& a, const CobarTensor& b) const {
  CobarTensor out(ring());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      const int inner = cobar_degree(p.second) * cobar_degree(q.first);
      CobarMonomial x = p.first;
      x.letters.insert(x.letters.end(), q.first.letters.begin(), q.first.letters.end());
      CobarMonomial y = p.second;
      y.letters.insert(y.letters.end(), q.second.letters.begin(), q.second.letters.end());
      Coefficient c = cp * cq;
      if (inner % 2 != 0) c = -c;
      out.add({x, y}, c);
    }
  return out;
}

Report LoopBialgebra::check_dictionary(int max_degree, int max_word_length, ExecMode mode) const {
  std::vector<CobarMonomial> sweep;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : omega_.basis(d, max_word_length)) sweep.push_back(std::move(m));

  struct Slot {
    bool dict = true, cubical = true, inverse = true;
  };
  std::vector<Slot> slots(sweep.size());
  for_each_slot(sweep.size(), mode, [&](std::size_t i) {
    const CobarMonomial& m = sweep[i];
    if (!(phi(cube_boundary(m)) == omega_.differential(phi(m)))) slots[i].dict = false;

    const RawNecklace raw = necklace_of(m);
    const int n = necklace_cube_dim(raw);
    for (int j = 2; j <= n && slots[i].cubical; ++j)
      for (int k = 1; k < j && slots[i].cubical; ++k)
        for (int a = 0; a <= 1; ++a)
          for (int b = 0; b <= 1; ++b) {
            const RawNecklace one = necklace_face(space(), necklace_face(space(), raw, j, b), k, a);
            const RawNecklace two =
                necklace_face(space(), necklace_face(space(), raw, k, a), j - 1, b);
            if (!(one == two)) slots[i].cubical = false;
          }

    const CobarElement em = CobarElement::single(ring(), m);
    if (!(phi(phi_inverse(m)) == em && phi_inverse(phi(m)) == em)) slots[i].inverse = false;
  });

  auto collect = [&](bool Slot::*field, const std::string& name) {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (!(slots[i].*field)) {
        ok = false;
        witness = omega_.show(sweep[i]);
        break;
      }
    return CheckItem{name, ok, witness};
  };
  Report r;
  r.items.push_back(collect(&Slot::dict, "cube boundary matches D under the bead dictionary"));
  r.items.push_back(collect(&Slot::cubical, "cube faces satisfy the cubical identities"));
  r.items.push_back(collect(&Slot::inverse, "bead dictionary and its inverse cancel"));
  return r;
}

Report LoopBialgebra::check_bialgebra(int max_degree, int max_word_length, ExecMode mode) const {
  using Triple = std::tuple<CobarMonomial, CobarMonomial, CobarMonomial>;
  std::vector<CobarMonomial> sweep;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : omega_.basis(d, max_word_length)) sweep.push_back(std::move(m));

  struct Slot {
    bool chain = true, coassoc = true, counit_l = true, counit_r = true;
  };
  std::vector<Slot> slots(sweep.size());
  for_each_slot(sweep.size(), mode, [&](std::size_t i) {
    const CobarMonomial& m = sweep[i];
    const CobarTensor& cop = nabla_cached(m);

    if (!(comultiplication(omega_.differential(m)) == tensor_differential(cop)))
      slots[i].chain = false;

    FormalSum<Triple> lhs(ring()), rhs(ring());
    for (const auto& [pair, c] : cop.terms()) {
      for (const auto& [pair2, c2] : nabla_cached(pair.first).terms())
        lhs.add({pair2.first, pair2.second, pair.second}, c * c2);
      for (const auto& [pair2, c2] : nabla_cached(pair.second).terms())
        rhs.add({pair.first, pair2.first, pair2.second}, c * c2);
    }
    if (!(lhs == rhs)) slots[i].coassoc = false;

    CobarElement left(ring()), right(ring());
    for (const auto& [pair, c] : cop.terms()) {
      if (pair.first.letters.empty()) left.add(pair.second, c);
      if (pair.second.letters.empty()) right.add(pair.first, c);
    }
    const CobarElement em = CobarElement::single(ring(), m);
    if (!(left == em)) slots[i].counit_l = false;
    if (!(right == em)) slots[i].counit_r = false;
  });

  auto collect = [&](bool Slot::*field, const std::string& name) {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (!(slots[i].*field)) {
        ok = false;
        witness = omega_.show(sweep[i]);
        break;
      }
    return CheckItem{name, ok, witness};
  };
  Report r;
  r.items.push_back(collect(&Slot::chain, "comultiplication commutes with the differential"));
  r.items.push_back(collect(&Slot::coassoc, "comultiplication is coassociative"));

  // multiplicativity on pairs of short words
  std::vector<CobarMonomial> pool;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : omega_.basis(d, std::min(max_word_length, 2))) pool.push_back(std::move(m));
  bool mult_ok = true, counit_alg_ok = true;
  std::string mult_w, counit_alg_w;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (cobar_degree(x) + cobar_degree(y) > max_degree) continue;
      const CobarElement ex = CobarElement::single(ring(), x);
      const CobarElement ey = CobarElement::single(ring(), y);
      const CobarElement xy = omega_.product(ex, ey);
      if (!(comultiplication(xy) ==
            tensor_product(comultiplication(ex), comultiplication(ey)))) {
        mult_ok = false;
        if (mult_w.empty()) mult_w = omega_.show(x) + ", " + omega_.show(y);
      }
      if (!(counit(xy) == counit(ex) * counit(ey))) {
        counit_alg_ok = false;
        if (counit_alg_w.empty()) counit_alg_w = omega_.show(x) + ", " + omega_.show(y);
      }
    }
  r.add("comultiplication is multiplicative for the Koszul product", mult_ok, mult_w);
  r.items.push_back(collect(&Slot::counit_l, "left counit law"));
  r.items.push_back(collect(&Slot::counit_r, "right counit law"));
  r.add("counit is an algebra map", counit_alg_ok, counit_alg_w);

  bool grouplike_ok = true;
  std::string grouplike_w;
  for (int i = 0; i < space().count(1); ++i) {
    const GenRef e{1, i};
    CobarElement shifted = omega_.unit();
    shifted += omega_.letter(e);
    CobarTensor expect(ring());
    for (const auto& [x, cx] : shifted.terms())
      for (const auto& [y, cy] : shifted.terms()) expect.add({x, y}, cx * cy);
    if (!(comultiplication(shifted) == expect)) {
      grouplike_ok = false;
      if (grouplike_w.empty()) grouplike_w = space().show(e);
    }
  }
  r.add("shifted edge letters are group-like", grouplike_ok, grouplike_w);
  return r;
}

std::string LoopBialgebra::show(const CobarTensor& t) const {
  return t.to_string([&](const std::pair<CobarMonomial, CobarMonomial>& p) {
    return omega_.show(p.first) + "(x)" + omega_.show(p.second);
  });
}

}  // namespace cobar
