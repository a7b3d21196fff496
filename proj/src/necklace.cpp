#include "cobar/necklace.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace cobar {

namespace {
std::size_t cell_cap() {
  if (const char* env = std::getenv("COBAR_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw input_error("COBAR_MAX_CELLS must be a positive integer");
    return v;
  }
  return 200000;
}

int popcount(unsigned m) { return __builtin_popcount(m); }

std::string subset_name(unsigned mask) {
  std::string out;
  for (int v = 0; v < 9; ++v)
    if (mask & (1u << v)) out += static_cast<char>('0' + v);
  return out;
}

std::string chain_name(const std::vector<unsigned>& chain) {
  std::string out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k) out += "<";
    out += subset_name(chain[k]);
  }
  return out;
}

void require_range(int n, int i, int j) {
  if (n < 0 || n > 8 || i < 0 || j < i || j > n)
    throw input_error("mapping space needs 0 <= i <= j <= n <= 8");
}

// subsets of {i..j} containing both endpoints, ordered by (size, value)
std::vector<unsigned> poset_elements(int i, int j) {
  const unsigned ends = (1u << i) | (1u << j);
  unsigned inner = 0;
  for (int v = i + 1; v < j; ++v) inner |= 1u << v;
  std::vector<unsigned> out;
  for (unsigned sub = inner;; sub = (sub - 1) & inner) {
    out.push_back(sub | ends);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return out;
}

bool subset_of(unsigned a, unsigned b) { return (a & ~b) == 0; }
}  // namespace

SimplicialSetPresentation lurie_mapping_space(int n, int i, int j) {
  require_range(n, i, j);
  const std::vector<unsigned> elements = poset_elements(i, j);
  const std::size_t cap = cell_cap();

  // strict inclusion chains grouped by length
  std::vector<std::vector<std::vector<unsigned>>> chains;
  chains.push_back({});
  for (unsigned e : elements) chains[0].push_back({e});
  std::size_t total = chains[0].size();
  if (total > cap) throw bound_error("mapping space exceeded the cell cap");
  while (!chains.back().empty()) {
    std::vector<std::vector<unsigned>> longer;
    for (const auto& c : chains.back())
      for (unsigned e : elements) {
        if (e == c.back() || !subset_of(c.back(), e)) continue;
        auto next = c;
        next.push_back(e);
        longer.push_back(std::move(next));
        if (++total > cap) throw bound_error("mapping space exceeded the cell cap");
      }
    if (longer.empty()) break;
    chains.push_back(std::move(longer));
  }

  SimplicialSetPresentation s("map(" + std::to_string(n) + ":" + std::to_string(i) + "->" +
                              std::to_string(j) + ")");
  std::map<std::string, GenRef> index;
  for (int d = 0; d < static_cast<int>(chains.size()); ++d)
    for (const auto& c : chains[d]) {
      std::vector<FormalSimplex> faces;
      if (d > 0)
        for (int f = 0; f <= d; ++f) {
          auto shorter = c;
          shorter.erase(shorter.begin() + f);
          faces.push_back(FormalSimplex{{}, index.at(chain_name(shorter))});
        }
      const int idx = s.add_generator(d, chain_name(c), std::move(faces));
      index.emplace(chain_name(c), GenRef{d, idx});
    }
  return s;
}

int CubeCell::dim() const { return popcount(visited & ~joints); }

std::string CubeCell::show() const { return subset_name(joints) + "|" + subset_name(visited); }

std::vector<std::vector<CubeCell>> necklace_cube_cells(int n, int i, int j) {
  require_range(n, i, j);
  const unsigned ends = (1u << i) | (1u << j);
  unsigned inner = 0;
  for (int v = i + 1; v < j; ++v) inner |= 1u << v;
  const std::size_t cap = cell_cap();

  std::vector<std::vector<CubeCell>> out;
  std::size_t total = 0;
  for (unsigned vis = inner;; vis = (vis - 1) & inner) {
    for (unsigned jo = vis;; jo = (jo - 1) & vis) {
      const CubeCell cell{jo | ends, vis | ends};
      const int d = cell.dim();
      if (d >= static_cast<int>(out.size())) out.resize(d + 1);
      out[d].push_back(cell);
      if (++total > cap) throw bound_error("cube model exceeded the cell cap");
      if (jo == 0) break;
    }
    if (vis == 0) break;
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

namespace {
std::vector<int> free_vertices(const CubeCell& c) {
  std::vector<int> out;
  for (int v = 0; v < 9; ++v)
    if ((c.visited & ~c.joints) & (1u << v)) out.push_back(v);
  return out;
}

// signed faces under d = sum_k (-1)^k (drop k-th free vertex - add it to J)
std::vector<std::pair<CubeCell, int>> cube_cell_boundary(const CubeCell& c) {
  std::vector<std::pair<CubeCell, int>> out;
  const std::vector<int> free = free_vertices(c);
  int sign = 1;
  for (int f : free) {
    sign = -sign;  // (-1)^k, k starting at 1
    out.push_back({CubeCell{c.joints, c.visited & ~(1u << f)}, sign});
    out.push_back({CubeCell{c.joints | (1u << f), c.visited}, -sign});
  }
  return out;
}
}  // namespace

ChainComplex necklace_cube_complex(int n, int i, int j, Ring ring) {
  const auto cells = necklace_cube_cells(n, i, j);
  std::vector<std::map<CubeCell, int>> index(cells.size());
  ChainComplex c(ring);
  for (std::size_t d = 0; d < cells.size(); ++d) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < cells[d].size(); ++k) {
      index[d].emplace(cells[d][k], static_cast<int>(k));
      names.push_back(cells[d][k].show());
    }
    c.basis.push_back(std::move(names));
  }
  c.diff.push_back(SparseMatrix(ring, 0, c.dim(0)));
  for (std::size_t d = 1; d < cells.size(); ++d) {
    SparseMatrix m(ring, c.dim(static_cast<int>(d) - 1), c.dim(static_cast<int>(d)));
    for (std::size_t k = 0; k < cells[d].size(); ++k)
      for (const auto& [face, sign] : cube_cell_boundary(cells[d][k]))
        m.add_to(index[d - 1].at(face), static_cast<int>(k), Coefficient(ring, sign));
    c.diff.push_back(std::move(m));
  }
  return c;
}

Chain ez_shuffle_chain(const SimplicialSetPresentation& nerve, Ring ring, const CubeCell& cell,
                       Fault fault) {
  Chain out(ring);
  std::vector<int> free = free_vertices(cell);
  std::vector<int> order(free.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a + 1; b < order.size(); ++b)
        if (order[a] > order[b]) ++inversions;
    std::vector<unsigned> flag = {cell.joints};
    unsigned running = cell.joints;
    for (int k : order) {
      running |= 1u << free[k];
      flag.push_back(running);
    }
    const int sign = (fault == Fault::EzSign || inversions % 2 == 0) ? 1 : -1;
    out.add(nerve.lookup(chain_name(flag)), Coefficient(ring, sign));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Report check_rigidification(int n, int i, int j, Ring ring, Fault fault, ExecMode mode) {
  const SimplicialSetPresentation nerve = lurie_mapping_space(n, i, j);
  const DgCoalgebra chains(nerve, ring);
  const ChainComplex cube = necklace_cube_complex(n, i, j, ring);
  Report r;

  const Report nerve_sq = chains.complex().validate_differential(mode);
  r.add("nerve boundary squares to zero", nerve_sq.all_pass(),
        nerve_sq.all_pass() ? "" : nerve_sq.first_failure()->witness);
  const Report cube_sq = cube.validate_differential(mode);
  r.add("cube boundary squares to zero", cube_sq.all_pass(),
        cube_sq.all_pass() ? "" : cube_sq.first_failure()->witness);

  const auto cells = necklace_cube_cells(n, i, j);
  bool chain_ok = true;
  std::string chain_w;
  for (const auto& level : cells)
    for (const CubeCell& cell : level) {
      Chain lhs = chains.boundary(ez_shuffle_chain(nerve, ring, cell, fault));
      Chain rhs(ring);
      for (const auto& [face, sign] : cube_cell_boundary(cell))
        rhs += ez_shuffle_chain(nerve, ring, face, fault) * Coefficient(ring, sign);
      if (!(lhs == rhs)) {
        chain_ok = false;
        if (chain_w.empty()) chain_w = cell.show();
      }
    }
  r.add("staircase triangulation is a chain map", chain_ok, chain_w);

  const int top = std::max(chains.complex().top_dim(), cube.top_dim());
  const auto h_nerve = homology_range(chains.complex(), top, mode);
  const auto h_cube = homology_range(cube, top, mode);
  bool point_ok = true;
  std::string point_w;
  for (int d = 0; d <= top; ++d) {
    const AbelianGroupInvariants expect{d == 0 ? 1 : 0, {}};
    if (!(h_nerve[d] == expect) || !(h_cube[d] == expect)) {
      point_ok = false;
      if (point_w.empty())
        point_w = "degree " + std::to_string(d) + ": nerve " + h_nerve[d].to_string() +
                  ", cubes " + h_cube[d].to_string();
    }
  }
  r.add("both models have the homology of a point", point_ok, point_w);
  return r;
}

std::vector<RawNecklace> enumerate_necklace_maps(const SimplicialSetPresentation& S, GenRef x,
                                                 GenRef y, int max_beads, int max_total_dim) {
  if (x.dim != 0 || y.dim != 0) throw input_error("necklace endpoints must be vertices");
  if (max_beads < 1 || max_total_dim < 1)
    throw input_error("necklace enumeration bounds must be positive");
  const std::size_t cap = cell_cap();

  // every simplex in normal form: a strictly decreasing degeneracy subset of
  // {0..d-1} applied to a generator of the complementary dimension
  std::vector<std::vector<FormalSimplex>> beads_by_dim(max_total_dim + 1);
  for (int d = 1; d <= max_total_dim; ++d)
    for (int g = std::min(d, S.top_dim()); g >= 0; --g)
      for (unsigned sub = 0; sub < (1u << d); ++sub) {
        if (popcount(sub) != d - g) continue;
        std::vector<int> word;
        for (int v = d - 1; v >= 0; --v)
          if (sub & (1u << v)) word.push_back(v);
        for (int k = 0; k < S.count(g); ++k)
          beads_by_dim[d].push_back(FormalSimplex{word, GenRef{g, k}});
      }

  std::vector<RawNecklace> out;
  RawNecklace word;
  const std::function<void(GenRef, int)> extend = [&](GenRef at, int dim_left) {
    if (!word.empty() && at == y) {
      out.push_back(word);
      if (out.size() > cap) throw bound_error("necklace enumeration exceeded the cell cap");
    }
    if (static_cast<int>(word.size()) == max_beads) return;
    for (int d = 1; d <= dim_left; ++d)
      for (const FormalSimplex& b : beads_by_dim[d]) {
        if (S.vertex(b, 0) != at) continue;
        word.push_back(b);
        extend(S.vertex(b, b.dim()), dim_left - d);
        word.pop_back();
      }
  };
  extend(x, max_total_dim);
  std::sort(out.begin(), out.end(), [](const RawNecklace& a, const RawNecklace& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {
int word_directions(const std::vector<FormalSimplex>& beads) {
  int n = 0;
  for (const FormalSimplex& b : beads) n += b.dim() - 1;
  return n;
}

// direction label (1-based, bead-major) -> (bead index, inner vertex)
std::pair<int, int> locate_direction(const std::vector<FormalSimplex>& beads, int d) {
  for (std::size_t b = 0; b < beads.size(); ++b) {
    const int inner = beads[b].dim() - 1;
    if (d <= inner) return {static_cast<int>(b), d};
    d -= inner;
  }
  throw validation_error("direction out of range for bead word");
}

unsigned remap_mask(unsigned mask, const std::vector<int>& keep) {
  unsigned out = 0;
  for (std::size_t idx = 0; idx < keep.size(); ++idx)
    if (mask & (1u << (keep[idx] - 1))) out |= 1u << idx;
  return out;
}

// split at ascending inner cut positions; pieces keep vertex ranges
std::vector<FormalSimplex> split_bead(const SimplicialSetPresentation& S,
                                      const FormalSimplex& bead, const std::vector<int>& cuts) {
  const int t = bead.dim();
  std::vector<FormalSimplex> pieces;
  int prev = 0;
  for (std::size_t c = 0; c <= cuts.size(); ++c) {
    const int next = c < cuts.size() ? cuts[c] : t;
    pieces.push_back(S.front_face(S.back_face(bead, t - prev), next - prev));
    prev = next;
  }
  return pieces;
}

// normal form of a bead list: unit beads vanish, a degenerate bead of
// dimension >= 2 is a degenerate simplex of the mapping space (dead cell)
std::optional<std::vector<FormalSimplex>> canonical_beads(std::vector<FormalSimplex> beads) {
  std::vector<FormalSimplex> out;
  for (FormalSimplex& b : beads) {
    if (b.is_degenerate()) {
      if (b.dim() >= 2) return std::nullopt;
      continue;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<ColimitCell> colimit_face(const SimplicialSetPresentation& S,
                                        const ColimitCell& cell, int i) {
  const int k = cell.dim();
  std::vector<FormalSimplex> beads = cell.beads;
  std::vector<unsigned> flag;
  std::vector<int> keep;

  if (i == 0) {
    // the first flag step becomes a set of joints: split the owning beads
    const unsigned D = cell.flag[1];
    std::vector<std::vector<int>> cuts(beads.size());
    for (int d = 1; d <= word_directions(beads); ++d) {
      const auto [b, v] = locate_direction(beads, d);
      if (D & (1u << (d - 1)))
        cuts[b].push_back(v);
      else
        keep.push_back(d);
    }
    std::vector<FormalSimplex> split;
    for (std::size_t b = 0; b < beads.size(); ++b)
      for (FormalSimplex& piece : split_bead(S, beads[b], cuts[b]))
        split.push_back(std::move(piece));
    beads = std::move(split);
    for (int l = 1; l <= k; ++l) flag.push_back(remap_mask(cell.flag[l], keep));
  } else if (i == k) {
    // the last flag step is no longer visited: inner faces at its vertices
    const unsigned W = cell.flag[k] ^ cell.flag[k - 1];
    std::vector<std::vector<int>> drop(beads.size());
    for (int d = 1; d <= word_directions(beads); ++d) {
      const auto [b, v] = locate_direction(beads, d);
      if (W & (1u << (d - 1)))
        drop[b].push_back(v);
      else
        keep.push_back(d);
    }
    for (std::size_t b = 0; b < beads.size(); ++b)
      for (auto v = drop[b].rbegin(); v != drop[b].rend(); ++v)
        beads[b] = S.face(beads[b], *v);
    for (int l = 0; l < k; ++l) flag.push_back(remap_mask(cell.flag[l], keep));
  } else {
    for (int l = 0; l <= k; ++l)
      if (l != i) flag.push_back(cell.flag[l]);
  }

  auto canon = canonical_beads(std::move(beads));
  if (!canon) return std::nullopt;
  return ColimitCell{std::move(*canon), std::move(flag)};
}
}  // namespace

ColimitChain colimit_ez_chain(const SimplicialSetPresentation& S, Ring ring,
                              const CobarMonomial& m) {
  (void)S;
  std::vector<FormalSimplex> beads;
  for (GenRef g : m.letters) beads.push_back(FormalSimplex{{}, g});
  const int n = word_directions(beads);

  ColimitChain out(ring);
  std::vector<int> order(n);
  for (int d = 0; d < n; ++d) order[d] = d + 1;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (order[a] > order[b]) ++inversions;
    std::vector<unsigned> flag = {0};
    for (int d : order) flag.push_back(flag.back() | (1u << (d - 1)));
    out.add(ColimitCell{beads, std::move(flag)}, Coefficient(ring, inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

ColimitChain colimit_boundary(const SimplicialSetPresentation& S, Ring ring,
                              const ColimitCell& cell) {
  ColimitChain out(ring);
  const int k = cell.dim();
  if (k == 0) return out;
  int sign = 1;
  for (int i = 0; i <= k; ++i, sign = -sign)
    if (auto face = colimit_face(S, cell, i)) out.add(*face, Coefficient(ring, sign));
  return out;
}

ColimitChain colimit_product(const SimplicialSetPresentation& S, const ColimitChain& a,
                             const ColimitChain& b) {
  (void)S;
  ColimitChain out(a.ring());
  for (const auto& [ca, xa] : a.terms())
    for (const auto& [cb, xb] : b.terms()) {
      std::vector<FormalSimplex> beads = ca.beads;
      beads.insert(beads.end(), cb.beads.begin(), cb.beads.end());
      const int shift = word_directions(ca.beads);
      std::vector<unsigned> left, right;  // flag steps of each factor
      for (int l = 1; l <= ca.dim(); ++l) left.push_back(ca.flag[l] ^ ca.flag[l - 1]);
      for (int l = 1; l <= cb.dim(); ++l)
        right.push_back((cb.flag[l] ^ cb.flag[l - 1]) << shift);
      const int p = static_cast<int>(left.size()), q = static_cast<int>(right.size());

      for (unsigned sel = 0; sel < (1u << (p + q)); ++sel) {
        if (popcount(sel) != p) continue;
        int inversions = 0, taken_left = 0;
        std::vector<unsigned> flag = {0};
        std::size_t il = 0, ir = 0;
        for (int pos = 0; pos < p + q; ++pos)
          if (sel & (1u << pos)) {
            flag.push_back(flag.back() | left[il++]);
            ++taken_left;
          } else {
            flag.push_back(flag.back() | right[ir++]);
            inversions += p - taken_left;  // right step crossing remaining left steps
          }
        const Coefficient sign(out.ring(), inversions % 2 == 0 ? 1 : -1);
        out.add(ColimitCell{beads, std::move(flag)}, xa * xb * sign);
      }
    }
  return out;
}

std::string show_colimit_cell(const SimplicialSetPresentation& S, const ColimitCell& cell) {
  std::string out = "[";
  for (std::size_t b = 0; b < cell.beads.size(); ++b) {
    if (b) out += "|";
    out += S.show(cell.beads[b]);
  }
  out += "]:";
  for (std::size_t l = 0; l < cell.flag.size(); ++l) {
    if (l) out += "<";
    std::string level;
    for (int d = 0; d < 9; ++d)
      if (cell.flag[l] & (1u << d)) level += static_cast<char>('1' + d);
    out += level.empty() ? "." : level;
  }
  return out;
}

bool presentations_isomorphic(const SimplicialSetPresentation& A,
                              const SimplicialSetPresentation& B) {
  if (A.top_dim() != B.top_dim()) return false;
  const int top = A.top_dim();
  for (int d = 0; d <= top; ++d)
    if (A.count(d) != B.count(d)) return false;

  const std::size_t cap = cell_cap();
  std::size_t nodes = 0;
  // match[d][i] = index in B of A's generator (d, i)
  std::vector<std::vector<int>> match(top + 1);

  const std::function<bool(int)> assign_dim = [&](int d) -> bool {
    if (d > top) return true;
    const int n = A.count(d);
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    do {
      if (++nodes > cap) throw bound_error("isomorphism search exceeded the cell cap");
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const auto& fa = A.generator({d, i}).faces;
        const auto& fb = B.generator({d, perm[i]}).faces;
        for (std::size_t f = 0; f < fa.size() && ok; ++f)
          ok = fb[f] == FormalSimplex{fa[f].degeneracies,
                                      {fa[f].gen.dim, match[fa[f].gen.dim][fa[f].gen.idx]}};
      }
      if (!ok) continue;
      match[d] = perm;
      if (assign_dim(d + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return assign_dim(0);
}

Report check_phi_algebra_map(const SimplicialSetPresentation& S, Ring ring, int max_cube_dim) {
  if (!S.is_reduced()) throw input_error("the dictionary checks need a reduced presentation");
  const LoopBialgebra lb(DgCoalgebra(S, ring), Fault::None);
  const CobarAlgebra& om = lb.algebra();
  Report r = check_loop_model(lb, max_cube_dim);

  std::set<RawNecklace> seen;
  const auto record = [&](const ColimitChain& chain) {
    for (const auto& term : chain.terms())
      if (!term.first.beads.empty()) seen.insert(term.first.beads);
  };

  bool mult_ok = true;
  std::string mult_w;
  for (int dx = 0; dx <= max_cube_dim; ++dx)
    for (const CobarMonomial& x : om.basis(dx, 2))
      for (int dy = 0; dx + dy <= max_cube_dim; ++dy)
        for (const CobarMonomial& y : om.basis(dy, 2)) {
          CobarMonomial xy = x;
          xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
          const ColimitChain joined = colimit_ez_chain(S, ring, xy);
          const ColimitChain split =
              colimit_product(S, colimit_ez_chain(S, ring, x), colimit_ez_chain(S, ring, y));
          record(joined);
          if (!(joined == split)) {
            mult_ok = false;
            if (mult_w.empty()) mult_w = om.show(x) + ", " + om.show(y);
          }
        }
  r.add("staircase chains multiply along necklace concatenation", mult_ok, mult_w);

  bool bnd_ok = true;
  std::string bnd_w;
  for (int d = 0; d <= max_cube_dim; ++d)
    for (const CobarMonomial& m : om.basis(d, 2)) {
      ColimitChain lhs(ring);
      for (const auto& [cell, c] : colimit_ez_chain(S, ring, m).terms()) {
        const ColimitChain faces = colimit_boundary(S, ring, cell);
        record(faces);
        lhs += faces * c;
      }
      // the two models orient each direction oppositely, hence the sign
      ColimitChain rhs(ring);
      for (const auto& [w, c] : lb.cube_boundary(m).terms()) {
        const ColimitChain ez = colimit_ez_chain(S, ring, w);
        record(ez);
        rhs += ez * (-c);
      }
      if (!(lhs == rhs)) {
        bnd_ok = false;
        if (bnd_w.empty()) bnd_w = om.show(m);
      }
    }
  r.add("staircase boundary matches the opposite cube orientation", bnd_ok, bnd_w);

  int max_beads = 1, max_dim = 1;
  for (const RawNecklace& w : seen) {
    max_beads = std::max(max_beads, static_cast<int>(w.size()));
    int total = 0;
    for (const FormalSimplex& b : w) total += b.dim();
    max_dim = std::max(max_dim, total);
  }
  const auto maps = enumerate_necklace_maps(S, {0, 0}, {0, 0}, max_beads, max_dim);
  const std::set<RawNecklace> listed(maps.begin(), maps.end());
  bool found_ok = true;
  std::string found_w;
  for (const RawNecklace& w : seen)
    if (!listed.count(w)) {
      found_ok = false;
      if (found_w.empty())
        found_w = show_colimit_cell(S, ColimitCell{w, {}});
      break;
    }
  r.add("every staircase cell appears among the enumerated necklace maps", found_ok, found_w);
  return r;
}

Report check_loop_model(const LoopBialgebra& lb, int max_cube_dim) {
  const CobarAlgebra& om = lb.algebra();
  const SimplicialSetPresentation& S = lb.space();
  Report r;

  bool dict_ok = true;
  std::string dict_w;
  for (int d = 0; d <= max_cube_dim; ++d)
    for (const CobarMonomial& m : om.basis(d, 2))
      if (!(lb.phi(lb.cube_boundary(m)) == om.differential(lb.phi(m)))) {
        dict_ok = false;
        if (dict_w.empty()) dict_w = om.show(m);
      }
  r.add("nondegenerate bead words transform by a chain map", dict_ok, dict_w);

  // all beads of cube dimension <= max_cube_dim: nondegenerate generators
  // plus their single degeneracies
  std::vector<FormalSimplex> beads, degenerate;
  for (int t = 1; t <= S.top_dim(); ++t)
    for (int k = 0; k < S.count(t); ++k) {
      if (t - 1 <= max_cube_dim) beads.push_back(FormalSimplex{{}, {t, k}});
      if (t <= max_cube_dim)
        for (int sj = 0; sj <= t; ++sj) {
          beads.push_back(FormalSimplex{{sj}, {t, k}});
          degenerate.push_back(FormalSimplex{{sj}, {t, k}});
        }
    }
  const auto raw_boundary = [&](const RawNecklace& raw) {
    CobarElement out(om.ring());
    Coefficient sign = Coefficient::one(om.ring());
    for (int dir = 1; dir <= necklace_cube_dim(raw); ++dir) {
      sign = -sign;
      if (auto c1 = necklace_canonical(necklace_face(S, raw, dir, 1))) out.add(*c1, sign);
      if (auto c0 = necklace_canonical(necklace_face(S, raw, dir, 0))) out.add(*c0, -sign);
    }
    return out;
  };
  bool degen_ok = true;
  std::string degen_w;
  const auto visit = [&](const RawNecklace& raw) {
    if (necklace_cube_dim(raw) > max_cube_dim) return;
    if (!raw_boundary(raw).is_zero()) {
      degen_ok = false;
      if (degen_w.empty())
        for (const FormalSimplex& b : raw) degen_w += S.show(b) + " ";
    }
  };
  for (const FormalSimplex& d0 : degenerate) {
    visit({d0});
    for (const FormalSimplex& b : beads) {
      visit({d0, b});
      visit({b, d0});
    }
  }
  r.add("degenerate bead words have vanishing boundary in the algebra", degen_ok, degen_w);

  bool leib_ok = true;
  std::string leib_w;
  for (int dx = 0; dx <= max_cube_dim; ++dx)
    for (const CobarMonomial& x : om.basis(dx, 2)) {
      if (x.letters.empty()) continue;
      for (int dy = 0; dx + dy <= max_cube_dim; ++dy)
        for (const CobarMonomial& y : om.basis(dy, 1)) {
          if (y.letters.empty()) continue;
          CobarMonomial xy = x;
          xy.letters.insert(xy.letters.end(), y.letters.begin(), y.letters.end());
          CobarElement expect =
              om.product(lb.cube_boundary(x), CobarElement::single(om.ring(), y));
          const CobarElement right =
              om.product(CobarElement::single(om.ring(), x), lb.cube_boundary(y));
          if (dx % 2 == 0)
            expect += right;
          else
            expect -= right;
          if (!(lb.cube_boundary(xy) == expect)) {
            leib_ok = false;
            if (leib_w.empty()) leib_w = om.show(x) + ", " + om.show(y);
          }
        }
    }
  r.add("cube boundary obeys the concatenation Leibniz rule", leib_ok, leib_w);
  return r;
}

}  // namespace cobar
