#include "cobar/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cobar/errors.hpp"

namespace cobar {

Word free_reduce(Word w) {
  Word out;
  for (int g : w) {
    if (g == 0) throw input_error("zero letter in word");
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

namespace {
// a < a^-1 < b < b^-1 < ...
bool letter_less(int x, int y) {
  const int ax = x > 0 ? x : -x, ay = y > 0 ? y : -y;
  if (ax != ay) return ax < ay;
  return x > y;  // positive before negative
}

bool word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return letter_less(x[i], y[i]);
  return false;
}
}  // namespace

Word relator_canonical(Word w) {
  w = cyclic_reduce(std::move(w));
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, inverse_word(w)}) {
    Word rot = base;
    for (std::size_t k = 0; k < base.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (word_less(rot, best)) best = rot;
    }
  }
  return best;
}

std::string GroupPresentation::show(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int g = w[i] > 0 ? w[i] : -w[i];
    if (g < 1 || g > rank()) throw input_error("letter outside presentation");
    if (i) out += "*";
    out += names[g - 1];
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (int i = 0; i < rank(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += show(relators[i]);
  }
  return out + ">";
}

Word GroupPresentation::parse_word(const std::string& text) const {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '*')) {
    // trim spaces
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw input_error("empty factor in word: " + text);
    tok = tok.substr(a, b - a + 1);
    if (tok == "1" && out.empty() && in.peek() == EOF) return {};
    long exp = 1;
    std::string name = tok;
    if (const auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw input_error("bad exponent in word: " + tok);
      }
    }
    int idx = -1;
    for (int i = 0; i < rank(); ++i)
      if (names[i] == name) idx = i;
    if (idx < 0) throw input_error("unknown generator in word: " + name);
    for (long k = 0; k < (exp > 0 ? exp : -exp); ++k) out.push_back(exp > 0 ? idx + 1 : -(idx + 1));
  }
  return out;
}

namespace {
// Replace every occurrence of generator g (1-based) by rep, and g^-1 by
// rep^-1, then canonicalize.
Word substitute(const Word& w, int g, const Word& rep) {
  Word out;
  const Word rep_inv = inverse_word(rep);
  for (int x : w) {
    if (x == g)
      out.insert(out.end(), rep.begin(), rep.end());
    else if (x == -g)
      out.insert(out.end(), rep_inv.begin(), rep_inv.end());
    else
      out.push_back(x);
  }
  return out;
}

void clean(GroupPresentation& p) {
  std::set<Word> seen;
  std::vector<Word> kept;
  for (const Word& r : p.relators) {
    Word c = relator_canonical(r);
    if (c.empty()) continue;
    if (seen.insert(c).second) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(), word_less);
  p.relators = std::move(kept);
}
}  // namespace

GroupPresentation tietze_reduce(GroupPresentation p) {
  for (int pass = 0; pass < 200; ++pass) {
    clean(p);
    // shortest relator owning a letter that occurs in it exactly once;
    // highest generator goes first, so composite edges are the ones removed
    int rel = -1, gen = 0;
    for (std::size_t i = 0; i < p.relators.size() && rel < 0; ++i) {
      const Word& r = p.relators[i];
      if (r.size() > 8) break;  // relators are sorted; longer ones only grow
      for (int g = p.rank(); g >= 1 && rel < 0; --g) {
        int count = 0;
        for (int x : r) count += (x == g || x == -g) ? 1 : 0;
        if (count == 1) {
          rel = static_cast<int>(i);
          gen = g;
        }
      }
    }
    if (rel < 0) break;

    // r = u g^e v = 1 solves to g = u^-1 v^-1 (e = 1) or g = v u (e = -1)
    const Word r = p.relators[rel];
    const auto pos = std::find_if(r.begin(), r.end(),
                                  [gen](int x) { return x == gen || x == -gen; });
    const Word u(r.begin(), pos), v(pos + 1, r.end());
    Word rep;
    if (*pos > 0) {
      rep = inverse_word(u);
      const Word vi = inverse_word(v);
      rep.insert(rep.end(), vi.begin(), vi.end());
    } else {
      rep = v;
      rep.insert(rep.end(), u.begin(), u.end());
    }

    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (static_cast<int>(i) == rel) continue;
      next.push_back(substitute(p.relators[i], gen, rep));
    }
    // drop the generator and renumber everything above it
    p.names.erase(p.names.begin() + (gen - 1));
    for (Word& w : next)
      for (int& x : w) {
        const int a = x > 0 ? x : -x;
        if (a > gen) x = x > 0 ? x - 1 : x + 1;
      }
    p.relators = std::move(next);
  }
  clean(p);
  return p;
}

AbelianGroupInvariants abelianization(const GroupPresentation& p) {
  const Ring Z = Ring::integers();
  SparseMatrix m(Z, static_cast<int>(p.relators.size()), p.rank());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (int x : p.relators[i]) {
      const int g = x > 0 ? x : -x;
      m.add_to(static_cast<int>(i), g - 1, Coefficient(Z, x > 0 ? 1 : -1));
    }
  const SmithResult s = smith_normal_form(m);
  AbelianGroupInvariants out;
  out.free_rank = p.rank() - static_cast<long>(s.diagonal.size());
  for (const mpz_class& d : s.diagonal)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

namespace {
// Coset table over columns (g, g^-1) per generator; cosets are 1-based,
// entry 0 means undefined.
struct CosetTable {
  explicit CosetTable(int rank, int cap) : rank(rank), cap(cap) {
    tab.push_back({});                                  // unused row 0
    tab.push_back(std::vector<int>(2 * rank, 0));       // coset 1
    parent = {0, 1};
  }

  int rank, cap;
  std::vector<std::vector<int>> tab;
  std::vector<int> parent;
  std::vector<int> merge_queue;

  static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inv_col(int c) { return c ^ 1; }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  bool live(int a) { return find(a) == a; }

  int define(int from, int c) {
    if (static_cast<int>(tab.size()) - 1 >= cap)
      throw bound_error("coset enumeration exceeded the table cap");
    tab.push_back(std::vector<int>(2 * rank, 0));
    parent.push_back(static_cast<int>(tab.size()) - 1);
    const int fresh = static_cast<int>(tab.size()) - 1;
    tab[from][c] = fresh;
    tab[fresh][inv_col(c)] = from;
    return fresh;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    merge_queue.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!merge_queue.empty()) {
      const int dead = merge_queue.back();
      merge_queue.pop_back();
      for (int c = 0; c < 2 * rank; ++c) {
        const int f = tab[dead][c];
        if (f == 0) continue;
        tab[f][inv_col(c)] = 0;
        const int mu = find(dead), nu = find(f);
        if (tab[mu][c] != 0)
          merge(nu, tab[mu][c]);
        else if (tab[nu][inv_col(c)] != 0)
          merge(mu, tab[nu][inv_col(c)]);
        else {
          tab[mu][c] = nu;
          tab[nu][inv_col(c)] = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const Word& w) {
    int f = alpha, i = 0;
    int b = alpha, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab[f][col(w[i])] != 0) f = tab[f][col(w[i])], ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][col(-w[j])] != 0) b = tab[b][col(-w[j])], --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab[f][col(w[i])] = b;
        tab[b][inv_col(col(w[i]))] = f;
        return;
      }
      define(f, col(w[i]));
    }
  }
};
}  // namespace

std::optional<long> todd_coxeter_order(const GroupPresentation& p, int max_cosets) {
  if (p.rank() == 0) return 1;
  std::vector<Word> rels;
  for (const Word& r : p.relators) {
    Word c = relator_canonical(r);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  CosetTable t(p.rank(), max_cosets);
  try {
    for (int alpha = 1; alpha < static_cast<int>(t.tab.size()); ++alpha) {
      if (!t.live(alpha)) continue;
      for (const Word& w : rels) {
        t.scan_and_fill(alpha, w);
        if (!t.live(alpha)) break;
      }
      if (!t.live(alpha)) continue;
      for (int c = 0; c < 2 * p.rank(); ++c)
        if (t.tab[alpha][c] == 0) t.define(alpha, c);
    }
  } catch (const bound_error&) {
    return std::nullopt;
  }
  long order = 0;
  for (int a = 1; a < static_cast<int>(t.tab.size()); ++a)
    if (t.live(a)) ++order;
  return order;
}

int FiniteGroupTable::inverse(int a) const {
  int found = -1;
  for (int b = 0; b < order(); ++b)
    if (mult[a][b] == 0 && mult[b][a] == 0) {
      if (found >= 0) throw validation_error("non-unique inverse in group table");
      found = b;
    }
  if (found < 0) throw validation_error("missing inverse in group table");
  return found;
}

Report FiniteGroupTable::validate() const {
  Report r;
  const int n = order();
  bool shape = static_cast<int>(mult.size()) == n;
  for (const auto& row : mult) shape = shape && static_cast<int>(row.size()) == n;
  if (shape)
    for (const auto& row : mult)
      for (int x : row) shape = shape && x >= 0 && x < n;
  r.add("table is a square array of element indices", shape);
  if (!shape) return r;

  bool id = true;
  for (int a = 0; a < n; ++a) id = id && mult[0][a] == a && mult[a][0] == a;
  r.add("element zero is a two-sided identity", id);

  bool inv = true;
  std::string inv_w;
  for (int a = 0; a < n && inv; ++a) {
    int count = 0;
    for (int b = 0; b < n; ++b)
      if (mult[a][b] == 0 && mult[b][a] == 0) ++count;
    if (count != 1) {
      inv = false;
      inv_w = element_names[a];
    }
  }
  r.add("every element has a unique two-sided inverse", inv, inv_w);

  bool assoc = true;
  std::string assoc_w;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          assoc = false;
          assoc_w = element_names[a] + ", " + element_names[b] + ", " + element_names[c];
        }
  r.add("multiplication is associative", assoc, assoc_w);
  return r;
}

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw input_error("cyclic group order must be positive");
  FiniteGroupTable g;
  g.name = "Z/" + std::to_string(n);
  for (int k = 0; k < n; ++k)
    g.element_names.push_back(k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k)));
  g.mult.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  return g;
}

FiniteGroupTable symmetric_group_3() {
  // permutations of {0,1,2}; composition (p*q)(x) = p(q(x))
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroupTable g;
  g.name = "S3";
  g.element_names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const int n = 6;
  g.mult.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> ab;
      for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      for (int k = 0; k < n; ++k)
        if (perms[k] == ab) g.mult[a][b] = k;
    }
  return g;
}

FiniteGroupTable quaternion_group_8() {
  // elements are (sign, axis) with axes 1, i, j, k; index = axis + 4*sign
  FiniteGroupTable g;
  g.name = "Q8";
  g.element_names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  const int axmul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int axsign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  g.mult.assign(8, std::vector<int>(8, 0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int s = ((a / 4) + (b / 4) + axsign[a % 4][b % 4]) % 2;
      g.mult[a][b] = axmul[a % 4][b % 4] + 4 * s;
    }
  return g;
}

}  // namespace cobar
