#include "cobar/cobar_algebra.hpp"

#include <map>
#include <utility>

namespace cobar {

namespace {
constexpr std::size_t kBasisGuard = 2'000'000;  // enumeration size bound
}

int cobar_degree(const CobarMonomial& m) {
  int d = 0;
  for (const GenRef& g : m.letters) d += g.dim - 1;
  return d;
}

CobarAlgebra::CobarAlgebra(DgCoalgebra chains, Fault fault)
    : chains_(std::move(chains)), fault_(fault) {
  if (!chains_.space().is_reduced())
    throw validation_error("cobar construction requires a single-vertex presentation, got '" +
                           chains_.space().name() + "'");
  for (int d = 1; d <= chains_.space().top_dim(); ++d)
    for (int i = 0; i < chains_.space().count(d); ++i) alphabet_.push_back({d, i});
}

CobarElement CobarAlgebra::unit() const { return CobarElement::single(ring(), CobarMonomial{}); }

CobarElement CobarAlgebra::letter(GenRef g) const {
  chains_.space().generator(g);
  if (g.dim < 1) throw validation_error("cobar letters have dimension >= 1");
  return CobarElement::single(ring(), CobarMonomial{{g}});
}

CobarElement CobarAlgebra::product(const CobarElement& a, const CobarElement& b) const {
  CobarElement out(ring());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      CobarMonomial m = ma;
      m.letters.insert(m.letters.end(), mb.letters.begin(), mb.letters.end());
      out.add(m, ca * cb);
    }
  return out;
}

// D on a single letter; every term is a 1- or 2-letter word of degree one less.
CobarElement CobarAlgebra::letter_differential(GenRef g) const {
  CobarElement out(ring());
  if (g.dim <= 1) return out;
  for (const auto& [h, c] : chains_.boundary(g).terms()) out.add(CobarMonomial{{h}}, -c);
  const FormalSimplex self{{}, g};
  Coefficient sign = Coefficient::one(ring());
  for (int p = 1; p <= g.dim - 1; ++p) {
    sign = -sign;  // (-1)^p
    const FormalSimplex front = chains_.space().front_face(self, p);
    const FormalSimplex back = chains_.space().back_face(self, g.dim - p);
    if (front.is_degenerate() || back.is_degenerate()) continue;
    out.add(CobarMonomial{{front.gen, back.gen}}, sign);
  }
  return out;
}

CobarElement CobarAlgebra::differential(const CobarMonomial& m) const {
  CobarElement out(ring());
  int prefix_degree = 0;
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    Coefficient sign = (prefix_degree % 2 == 0 || fault_ == Fault::CobarLeibniz)
                           ? Coefficient::one(ring())
                           : -Coefficient::one(ring());
    for (const auto& [piece, c] : letter_differential(m.letters[i]).terms()) {
      CobarMonomial word;
      word.letters.assign(m.letters.begin(), m.letters.begin() + static_cast<long>(i));
      word.letters.insert(word.letters.end(), piece.letters.begin(), piece.letters.end());
      word.letters.insert(word.letters.end(), m.letters.begin() + static_cast<long>(i) + 1,
                          m.letters.end());
      out.add(word, sign * c);
    }
    prefix_degree += m.letters[i].dim - 1;
  }
  return out;
}

CobarElement CobarAlgebra::differential(const CobarElement& e) const {
  CobarElement out(ring());
  for (const auto& [m, c] : e.terms())
    for (const auto& [w, c2] : differential(m).terms()) out.add(w, c * c2);
  return out;
}

Coefficient CobarAlgebra::augmentation(const CobarElement& e) const {
  return e.coefficient(CobarMonomial{});
}

std::vector<CobarMonomial> CobarAlgebra::basis(int degree, int max_word_length) const {
  std::vector<CobarMonomial> out;
  if (degree < 0 || max_word_length < 0) return out;
  CobarMonomial word;
  int deg = 0;
  // depth-first in alphabet order: visits words in lexicographic order
  auto rec = [&](auto&& self) -> void {
    if (deg == degree) {
      out.push_back(word);
      if (out.size() > kBasisGuard) throw bound_error("cobar basis enumeration too large");
    }
    if (static_cast<int>(word.letters.size()) == max_word_length) return;
    for (const GenRef& g : alphabet_) {
      const int d = g.dim - 1;
      if (deg + d > degree) continue;
      word.letters.push_back(g);
      deg += d;
      self(self);
      word.letters.pop_back();
      deg -= d;
    }
  };
  rec(rec);
  return out;
}

Report CobarAlgebra::check_differential_squared(int max_degree, int max_word_length,
                                                ExecMode mode) const {
  std::vector<CobarMonomial> sweep;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : basis(d, max_word_length)) sweep.push_back(std::move(m));

  std::vector<char> ok(sweep.size(), 1);
  for_each_slot(sweep.size(), mode, [&](std::size_t i) {
    if (!differential(differential(sweep[i])).is_zero()) ok[i] = 0;
  });

  bool pass = true;
  std::string witness;
  for (std::size_t i = 0; i < sweep.size(); ++i)
    if (!ok[i]) {
      pass = false;
      witness = show(sweep[i]);
      break;
    }
  Report r;
  r.add("D^2 = 0 on words of degree <= " + std::to_string(max_degree) + ", length <= " +
            std::to_string(max_word_length),
        pass, witness);
  return r;
}

Report CobarAlgebra::check_structure(int max_degree, int max_word_length, ExecMode mode) const {
  std::vector<CobarMonomial> sweep;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : basis(d, max_word_length)) sweep.push_back(std::move(m));

  struct Slot {
    bool grading = true, filtration = true, augment = true;
  };
  std::vector<Slot> slots(sweep.size());
  for_each_slot(sweep.size(), mode, [&](std::size_t i) {
    const CobarMonomial& m = sweep[i];
    const CobarElement dm = differential(m);
    for (const auto& [w, c] : dm.terms()) {
      (void)c;
      if (cobar_degree(w) != cobar_degree(m) - 1) slots[i].grading = false;
      if (w.letters.size() < m.letters.size() || w.letters.size() > m.letters.size() + 1)
        slots[i].filtration = false;
    }
    if (!augmentation(dm).is_zero()) slots[i].augment = false;
  });

  auto collect = [&](bool Slot::*field, const std::string& name) {
    bool okall = true;
    std::string witness;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (!(slots[i].*field)) {
        okall = false;
        witness = show(sweep[i]);
        break;
      }
    return CheckItem{name, okall, witness};
  };

  Report r;
  r.items.push_back(collect(&Slot::grading, "differential lowers degree by one"));
  r.items.push_back(collect(&Slot::filtration, "differential never shortens words"));
  r.items.push_back(collect(&Slot::augment, "augmentation vanishes on boundaries"));

  // unit, associativity, multiplicativity of the augmentation, degree
  // additivity; on a small pool so triples stay cheap
  std::vector<CobarMonomial> pool;
  for (int d = 0; d <= std::min(max_degree, 2); ++d)
    for (auto& m : basis(d, std::min(max_word_length, 2))) pool.push_back(std::move(m));

  bool unit_ok = true, assoc_ok = true, aug_ok = true, degree_ok = true;
  std::string unit_w, assoc_w, aug_w, degree_w;
  for (const auto& x : pool) {
    const CobarElement ex = CobarElement::single(ring(), x);
    if (!(product(unit(), ex) == ex && product(ex, unit()) == ex)) {
      unit_ok = false;
      if (unit_w.empty()) unit_w = show(x);
    }
  }
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const CobarElement ex = CobarElement::single(ring(), x);
      const CobarElement ey = CobarElement::single(ring(), y);
      const CobarElement xy = product(ex, ey);
      if (!(augmentation(xy) == augmentation(ex) * augmentation(ey))) {
        aug_ok = false;
        if (aug_w.empty()) aug_w = show(x) + ", " + show(y);
      }
      for (const auto& [w, c] : xy.terms()) {
        (void)c;
        if (cobar_degree(w) != cobar_degree(x) + cobar_degree(y)) {
          degree_ok = false;
          if (degree_w.empty()) degree_w = show(x) + ", " + show(y);
        }
      }
      for (const auto& z : pool) {
        const CobarElement ez = CobarElement::single(ring(), z);
        if (!(product(xy, ez) == product(ex, product(ey, ez)))) {
          assoc_ok = false;
          if (assoc_w.empty()) assoc_w = show(x) + ", " + show(y) + ", " + show(z);
        }
      }
    }
  r.add("empty word is a two-sided unit", unit_ok, unit_w);
  r.add("concatenation is associative", assoc_ok, assoc_w);
  r.add("augmentation is an algebra map", aug_ok, aug_w);
  r.add("degree is additive under products", degree_ok, degree_w);
  return r;
}

std::string CobarAlgebra::show(const CobarMonomial& m) const {
  if (m.letters.empty()) return "1";
  std::string out = "[";
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    if (i) out += "|";
    out += chains_.space().show(m.letters[i]);
  }
  return out + "]";
}

std::string CobarAlgebra::show(const CobarElement& e) const {
  return e.to_string([&](const CobarMonomial& m) { return show(m); });
}

CobarMap::CobarMap(SimplicialMap f, Ring ring)
    : f_(std::move(f)),
      source_(DgCoalgebra(f_.source(), ring)),
      target_(DgCoalgebra(f_.target(), ring)) {
  const Report v = f_.validate();
  if (!v.all_pass())
    throw validation_error("induced cobar map needs a valid simplicial map: " +
                           v.first_failure()->name);
}

CobarElement CobarMap::apply(const CobarMonomial& m) const {
  CobarMonomial image;
  for (const GenRef& g : m.letters) {
    const FormalSimplex fg = f_.image(FormalSimplex{{}, g});
    if (fg.is_degenerate()) return CobarElement(source_.ring());  // letter dies
    image.letters.push_back(fg.gen);
  }
  return CobarElement::single(source_.ring(), image);
}

CobarElement CobarMap::apply(const CobarElement& e) const {
  CobarElement out(source_.ring());
  for (const auto& [m, c] : e.terms())
    for (const auto& [w, c2] : apply(m).terms()) out.add(w, c * c2);
  return out;
}

Report CobarMap::check(int max_degree, int max_word_length, ExecMode mode) const {
  std::vector<CobarMonomial> sweep;
  for (int d = 0; d <= max_degree; ++d)
    for (auto& m : source_.basis(d, max_word_length)) sweep.push_back(std::move(m));

  std::vector<char> chain_ok(sweep.size(), 1);
  for_each_slot(sweep.size(), mode, [&](std::size_t i) {
    if (!(apply(source_.differential(sweep[i])) == target_.differential(apply(sweep[i]))))
      chain_ok[i] = 0;
  });
  bool chain_pass = true;
  std::string chain_w;
  for (std::size_t i = 0; i < sweep.size(); ++i)
    if (!chain_ok[i]) {
      chain_pass = false;
      chain_w = source_.show(sweep[i]);
      break;
    }

  bool mult_pass = true;
  std::string mult_w;
  std::vector<CobarMonomial> pool;
  for (int d = 0; d <= std::min(max_degree, 2); ++d)
    for (auto& m : source_.basis(d, std::min(max_word_length, 2))) pool.push_back(std::move(m));
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const CobarElement ex = CobarElement::single(source_.ring(), x);
      const CobarElement ey = CobarElement::single(source_.ring(), y);
      if (!(apply(source_.product(ex, ey)) == target_.product(apply(ex), apply(ey)))) {
        mult_pass = false;
        if (mult_w.empty()) mult_w = source_.show(x) + ", " + source_.show(y);
      }
    }

  Report r;
  r.add("induced map commutes with D", chain_pass, chain_w);
  r.add("induced map is multiplicative", mult_pass, mult_w);
  r.add("induced map preserves the unit",
        apply(source_.unit()) == target_.unit(), "");
  return r;
}

std::vector<AbelianGroupInvariants> loop_homology(const SimplicialSetPresentation& S, Ring ring,
                                                  int max_degree, ExecMode mode) {
  if (!S.is_reduced())
    throw input_error("loop homology needs a single-vertex presentation, got '" + S.name() + "'");
  if (S.count(1) > 0)
    throw input_error("loop homology needs a presentation with no 1-dimensional generators; '" +
                      S.name() + "' has " + std::to_string(S.count(1)) +
                      " (each degree must have a finite word basis)");
  if (max_degree < 0) throw input_error("loop homology needs max_degree >= 0");

  const CobarAlgebra omega((DgCoalgebra(S, ring)));
  // letters have degree >= 1, so words of degree d have at most d letters
  std::vector<std::vector<CobarMonomial>> bases;
  for (int d = 0; d <= max_degree + 1; ++d) bases.push_back(omega.basis(d, d));

  ChainComplex c(ring);
  for (int d = 0; d <= max_degree + 1; ++d) {
    std::vector<std::string> names;
    names.reserve(bases[d].size());
    for (const auto& m : bases[d]) names.push_back(omega.show(m));
    c.basis.push_back(std::move(names));
  }
  for (int d = 0; d <= max_degree + 1; ++d) {
    const int rows = d == 0 ? 0 : static_cast<int>(bases[d - 1].size());
    SparseMatrix m(ring, rows, static_cast<int>(bases[d].size()));
    if (d > 0) {
      std::map<CobarMonomial, int> row_of;
      for (std::size_t i = 0; i < bases[d - 1].size(); ++i)
        row_of[bases[d - 1][i]] = static_cast<int>(i);
      for (std::size_t j = 0; j < bases[d].size(); ++j)
        for (const auto& [w, coef] : omega.differential(bases[d][j]).terms())
          m.add_to(row_of.at(w), static_cast<int>(j), coef);
    }
    c.diff.push_back(std::move(m));
  }
  return homology_range(c, max_degree, mode);
}

}  // namespace cobar
