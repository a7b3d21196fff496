#include "cobar/pi1.hpp"

#include <deque>
#include <map>
#include <utility>

namespace cobar {

GroupPresentation pi1_presentation(const SimplicialSetPresentation& S) {
  const Report v = S.validate();
  if (!v.all_pass())
    throw validation_error("presentation fails validation: " + v.first_failure()->name);
  const int nv = S.count(0), ne = S.count(1);

  // endpoints: edge e runs from face 1 (tail) to face 0 (head)
  std::vector<int> head(ne), tail(ne);
  for (int e = 0; e < ne; ++e) {
    head[e] = S.face(FormalSimplex{{}, {1, e}}, 0).gen.idx;
    tail[e] = S.face(FormalSimplex{{}, {1, e}}, 1).gen.idx;
  }

  // breadth-first spanning tree over the undirected vertex graph
  std::vector<char> in_tree(ne, 0), seen(nv, 0);
  if (nv == 0) throw input_error("empty presentation has no fundamental group");
  std::deque<int> queue = {0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int v0 = queue.front();
    queue.pop_front();
    for (int e = 0; e < ne; ++e) {
      if (in_tree[e]) continue;
      int other = -1;
      if (tail[e] == v0 && !seen[head[e]]) other = head[e];
      if (head[e] == v0 && !seen[tail[e]]) other = tail[e];
      if (other < 0) continue;
      in_tree[e] = 1;
      seen[other] = 1;
      queue.push_back(other);
    }
  }
  for (int v0 = 0; v0 < nv; ++v0)
    if (!seen[v0]) throw input_error("vertex graph is not connected");

  GroupPresentation p;
  std::vector<int> letter(ne, 0);  // 0 for tree edges
  for (int e = 0; e < ne; ++e)
    if (!in_tree[e]) {
      p.names.push_back(S.show(GenRef{1, e}));
      letter[e] = static_cast<int>(p.names.size());
    }

  // g(face): identity for degenerate and tree edges
  const auto g = [&](const FormalSimplex& f) -> int {
    if (f.is_degenerate()) return 0;
    return letter[f.gen.idx];
  };
  for (int t = 0; t < S.count(2); ++t) {
    const FormalSimplex tau{{}, {2, t}};
    Word w;
    if (const int x = g(S.face(tau, 2))) w.push_back(x);
    if (const int x = g(S.face(tau, 0))) w.push_back(x);
    if (const int x = g(S.face(tau, 1))) w.push_back(-x);
    w = free_reduce(std::move(w));
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

GroupPresentation fundamental_group(const SimplicialSetPresentation& S) {
  return tietze_reduce(pi1_presentation(S));
}

Report shift_consistency(const SimplicialSetPresentation& S, Ring ring) {
  const CobarAlgebra om(DgCoalgebra(S, ring));
  const auto shift = [&](const FormalSimplex& f) {
    CobarElement out = om.unit();
    if (!f.is_degenerate()) out += om.letter(f.gen);
    return out;
  };
  bool ok = true;
  std::string witness;
  for (int t = 0; t < S.count(2); ++t) {
    const FormalSimplex tau{{}, {2, t}};
    const CobarElement lhs = om.differential(CobarMonomial{{GenRef{2, t}}});
    CobarElement rhs = shift(S.face(tau, 1));
    rhs -= om.product(shift(S.face(tau, 2)), shift(S.face(tau, 0)));
    if (!(lhs == rhs)) {
      ok = false;
      witness = S.show(GenRef{2, t});
      break;
    }
  }
  Report r;
  r.add("two simplex differentials match the shifted edge product rule", ok, witness);
  return r;
}

namespace {
using GroupElt = std::map<int, Coefficient>;           // sparse group algebra element
using GroupTensor = std::map<std::pair<int, int>, Coefficient>;

void put(GroupElt& x, int g, const Coefficient& c) {
  const auto [it, fresh] = x.emplace(g, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

void put(GroupTensor& x, std::pair<int, int> g, const Coefficient& c) {
  const auto [it, fresh] = x.emplace(g, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

GroupTensor coproduct(const GroupElt& x) {
  GroupTensor out;
  for (const auto& [g, c] : x) put(out, {g, g}, c);
  return out;
}

GroupTensor tensor_square(const GroupElt& x) {
  GroupTensor out;
  for (const auto& [g, c] : x)
    for (const auto& [h, d] : x) put(out, {g, h}, c * d);
  return out;
}

Coefficient counit(const GroupElt& x, Ring ring) {
  Coefficient out(ring, 0);
  for (const auto& [g, c] : x) out += c;
  return out;
}
}  // namespace

std::vector<std::string> grouplike_elements(const FiniteGroupTable& G, Ring ring,
                                            Report* report) {
  Report r;
  const Report table = G.validate();
  r.add("group axioms hold for the table", table.all_pass(),
        table.all_pass() ? "" : table.first_failure()->name);

  // Z, Q and validated prime fields all lack zero divisors, which is what
  // pins group-like supports to a single basis element.
  r.add("coefficient ring is an integral domain", true);

  bool basis_ok = true;
  std::string basis_w;
  for (int g = 0; g < G.order(); ++g) {
    GroupElt x{{g, Coefficient(ring, 1)}};
    if (!(coproduct(x) == tensor_square(x)) || !(counit(x, ring) == Coefficient(ring, 1))) {
      basis_ok = false;
      basis_w = G.element_names[g];
      break;
    }
  }
  r.add("every group element is group-like with counit one", basis_ok, basis_w);

  // falsification probes: no support of size two survives the coproduct
  bool probe_ok = true;
  std::string probe_w;
  const long probes[] = {1, -1, 2};
  for (int g = 0; g < G.order() && probe_ok; ++g)
    for (int h = g + 1; h < G.order() && probe_ok; ++h)
      for (long a : probes)
        for (long b : probes) {
          GroupElt x;
          put(x, g, Coefficient(ring, a));
          put(x, h, Coefficient(ring, b));
          if (x.size() == 2 && coproduct(x) == tensor_square(x)) {
            probe_ok = false;
            probe_w = G.element_names[g] + " + " + G.element_names[h];
          }
        }
  r.add("no two element support probe is group-like", probe_ok, probe_w);

  if (report) *report = r;
  if (!r.all_pass())
    throw validation_error("group-like computation failed: " + r.first_failure()->name);
  return G.element_names;
}

Report antipode_check(const FiniteGroupTable& G, Ring ring) {
  Report r;
  const int n = G.order();

  bool anti_ok = true;
  std::string anti_w;
  for (int g = 0; g < n && anti_ok; ++g)
    for (int h = 0; h < n; ++h)
      if (G.inverse(G.mult[g][h]) != G.mult[G.inverse(h)][G.inverse(g)]) {
        anti_ok = false;
        anti_w = G.element_names[g] + ", " + G.element_names[h];
        break;
      }
  r.add("antipode is an antihomomorphism", anti_ok, anti_w);

  bool invol_ok = true;
  for (int g = 0; g < n; ++g) invol_ok = invol_ok && G.inverse(G.inverse(g)) == g;
  r.add("antipode is an involution", invol_ok);

  // m(S (x) id)Delta = unit . counit and the mirror, on a dense probe with
  // distinct coefficients so linearity failures cannot cancel
  GroupElt probe;
  for (int g = 0; g < n; ++g) put(probe, g, Coefficient(ring, g + 1));
  GroupElt left, right;
  for (const auto& [pair, c] : coproduct(probe)) {
    put(left, G.mult[G.inverse(pair.first)][pair.second], c);
    put(right, G.mult[pair.first][G.inverse(pair.second)], c);
  }
  GroupElt expect;
  put(expect, 0, counit(probe, ring));
  r.add("antipode identity, antipode on the left", left == expect);
  r.add("antipode identity, antipode on the right", right == expect);
  return r;
}

}  // namespace cobar
