#include "cobar/simplicial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "cobar/errors.hpp"

namespace cobar {

int SimplicialSetPresentation::add_generator(int dim, const std::string& id,
                                             std::vector<FormalSimplex> faces) {
  if (dim < 0) throw validation_error("generator dimension must be >= 0");
  if (static_cast<int>(gens_.size()) <= dim) gens_.resize(dim + 1);
  gens_[dim].push_back({id, std::move(faces)});
  return static_cast<int>(gens_[dim].size()) - 1;
}

const Generator& SimplicialSetPresentation::generator(GenRef g) const {
  if (g.dim < 0 || g.dim > top_dim() || g.idx < 0 || g.idx >= count(g.dim))
    throw validation_error("generator reference out of range");
  return gens_[g.dim][g.idx];
}

FormalSimplex SimplicialSetPresentation::face(const FormalSimplex& f, int i) const {
  const int n = f.dim();
  if (n == 0) throw validation_error("vertex has no faces");
  if (i < 0 || i > n) throw validation_error("face index out of range");
  if (f.degeneracies.empty()) {
    const Generator& g = generator(f.gen);
    if (static_cast<int>(g.faces.size()) != n + 1)
      throw validation_error("generator " + g.id + " has wrong face count");
    return g.faces[i];
  }
  const int j = f.degeneracies.front();
  FormalSimplex inner{std::vector<int>(f.degeneracies.begin() + 1, f.degeneracies.end()), f.gen};
  if (i == j || i == j + 1) return inner;
  if (i < j) return degenerate(face(inner, i), j - 1);
  return degenerate(face(inner, i - 1), j);
}

FormalSimplex SimplicialSetPresentation::degenerate(const FormalSimplex& f, int j) const {
  if (j < 0 || j > f.dim()) throw validation_error("degeneracy index out of range");
  FormalSimplex out = f;
  // s_j s_i = s_{i+1} s_j for j <= i: push j inward, bumping larger indices.
  std::size_t pos = 0;
  int k = j;
  while (pos < out.degeneracies.size() && k <= out.degeneracies[pos]) {
    out.degeneracies[pos] += 1;
    ++pos;
  }
  out.degeneracies.insert(out.degeneracies.begin() + pos, k);
  return out;
}

GenRef SimplicialSetPresentation::vertex(const FormalSimplex& f, int k) const {
  if (k < 0 || k > f.dim()) throw validation_error("vertex index out of range");
  FormalSimplex cur = f;
  while (cur.dim() > k) cur = face(cur, cur.dim());
  for (int t = 0; t < k; ++t) cur = face(cur, 0);
  return cur.gen;
}

FormalSimplex SimplicialSetPresentation::front_face(const FormalSimplex& f, int p) const {
  if (p < 0 || p > f.dim()) throw validation_error("front face size out of range");
  FormalSimplex cur = f;
  while (cur.dim() > p) cur = face(cur, cur.dim());
  return cur;
}

FormalSimplex SimplicialSetPresentation::back_face(const FormalSimplex& f, int q) const {
  if (q < 0 || q > f.dim()) throw validation_error("back face size out of range");
  FormalSimplex cur = f;
  while (cur.dim() > q) cur = face(cur, 0);
  return cur;
}

std::string SimplicialSetPresentation::show(const FormalSimplex& f) const {
  std::ostringstream os;
  for (int s : f.degeneracies) os << "s" << s << " ";
  os << generator(f.gen).id;
  return os.str();
}

FormalSimplex SimplicialSetPresentation::parse_face_expr(const std::string& text) const {
  std::istringstream is(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  if (tokens.empty()) throw input_error("empty face expression");
  FormalSimplex f{{}, lookup(tokens.back())};
  for (auto it = tokens.rbegin() + 1; it != tokens.rend(); ++it) {
    const std::string& s = *it;
    if (s.size() < 2 || s[0] != 's' ||
        s.find_first_not_of("0123456789", 1) != std::string::npos)
      throw input_error("bad degeneracy token '" + s + "' in face expression '" + text + "'");
    int j = std::stoi(s.substr(1));
    if (j > f.dim())
      throw input_error("degeneracy s" + std::to_string(j) + " out of range in '" + text + "'");
    f = degenerate(f, j);
  }
  return f;
}

GenRef SimplicialSetPresentation::lookup(const std::string& id) const {
  GenRef found{-1, -1};
  int hits = 0;
  for (int d = 0; d <= top_dim(); ++d)
    for (int i = 0; i < count(d); ++i)
      if (gens_[d][i].id == id) {
        found = {d, i};
        ++hits;
      }
  if (hits == 0) throw input_error("unknown generator id '" + id + "'");
  if (hits > 1) throw input_error("ambiguous generator id '" + id + "'");
  return found;
}

namespace {

bool word_valid(const FormalSimplex& f) {
  // strictly decreasing, and each s index legal at its application dimension
  const auto& w = f.degeneracies;
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    if (w[t] <= w[t + 1]) return false;
  const int len = static_cast<int>(w.size());
  for (int t = len - 1; t >= 0; --t) {
    const int applied_dim = f.gen.dim + (len - 1 - t);
    if (w[t] < 0 || w[t] > applied_dim) return false;
  }
  return true;
}

}  // namespace

Report SimplicialSetPresentation::validate(ExecMode mode) const {
  Report r;
  // id uniqueness per dimension
  bool ids_ok = true;
  std::string id_witness;
  for (int d = 0; d <= top_dim() && ids_ok; ++d)
    for (int i = 0; i < count(d) && ids_ok; ++i) {
      const std::string& id = gens_[d][i].id;
      if (id.empty() || id.find_first_of(" \t\n") != std::string::npos) {
        ids_ok = false;
        id_witness = "'" + id + "' in dimension " + std::to_string(d);
      }
      for (int k = i + 1; k < count(d) && ids_ok; ++k)
        if (gens_[d][k].id == id) {
          ids_ok = false;
          id_witness = "'" + id + "' repeated in dimension " + std::to_string(d);
        }
    }
  r.add("generator ids well formed and unique per dimension", ids_ok, id_witness);
  if (!ids_ok) return r;

  struct GenCheck {
    bool ok = true;
    std::string witness;
  };
  std::vector<std::pair<int, int>> all;
  for (int d = 1; d <= top_dim(); ++d)
    for (int i = 0; i < count(d); ++i) all.push_back({d, i});
  std::vector<GenCheck> slots(all.size());

  for_each_slot(all.size(), mode, [&](std::size_t idx) {
    const auto [d, i] = all[idx];
    const Generator& g = gens_[d][i];
    GenCheck& out = slots[idx];
    try {
      if (static_cast<int>(g.faces.size()) != d + 1) {
        out = {false, g.id + ": expected " + std::to_string(d + 1) + " faces, got " +
                          std::to_string(g.faces.size())};
        return;
      }
      for (int k = 0; k <= d; ++k) {
        const FormalSimplex& f = g.faces[k];
        generator(f.gen);  // throws on bad ref
        if (!word_valid(f)) {
          out = {false, g.id + ": face " + std::to_string(k) + " degeneracy word not normal"};
          return;
        }
        if (f.dim() != d - 1) {
          out = {false, g.id + ": face " + std::to_string(k) + " has dimension " +
                            std::to_string(f.dim())};
          return;
        }
      }
      if (d >= 2) {
        const FormalSimplex self{{}, {d, i}};
        for (int fj = 1; fj <= d; ++fj)
          for (int fi = 0; fi < fj; ++fi) {
            const FormalSimplex lhs = face(face(self, fj), fi);
            const FormalSimplex rhs = face(face(self, fi), fj - 1);
            if (!(lhs == rhs)) {
              out = {false, g.id + ": d" + std::to_string(fi) + " d" + std::to_string(fj) +
                                " != d" + std::to_string(fj - 1) + " d" + std::to_string(fi)};
              return;
            }
          }
      }
    } catch (const std::exception& e) {
      out = {false, g.id + ": " + e.what()};
    }
  });

  bool faces_ok = true, ident_ok = true;
  std::string face_witness, ident_witness;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].ok) continue;
    const bool identity_issue = slots[k].witness.find("!=") != std::string::npos;
    if (identity_issue && ident_ok) { ident_ok = false; ident_witness = slots[k].witness; }
    if (!identity_issue && faces_ok) { faces_ok = false; face_witness = slots[k].witness; }
  }
  r.add("face lists complete and in normal form", faces_ok, face_witness);
  r.add("simplicial identities d_i d_j = d_{j-1} d_i", ident_ok, ident_witness);
  return r;
}

namespace {

SimplicialSetPresentation make_point() {
  SimplicialSetPresentation s("point");
  s.add_generator(0, "v");
  return s;
}

SimplicialSetPresentation make_circle() {
  SimplicialSetPresentation s("circle");
  s.add_generator(0, "v");
  const FormalSimplex v{{}, {0, 0}};
  s.add_generator(1, "a", {v, v});
  return s;
}

SimplicialSetPresentation make_sphere(int n) {
  SimplicialSetPresentation s("sphere(" + std::to_string(n) + ")");
  s.add_generator(0, "v");
  std::vector<int> word;
  for (int i = n - 2; i >= 0; --i) word.push_back(i);
  const FormalSimplex collapsed{word, {0, 0}};
  s.add_generator(n, "sigma", std::vector<FormalSimplex>(n + 1, collapsed));
  return s;
}

// One-vertex torus: two triangles over edges a, b and diagonal c.
SimplicialSetPresentation make_torus() {
  SimplicialSetPresentation s("torus");
  s.add_generator(0, "v");
  const FormalSimplex v{{}, {0, 0}};
  s.add_generator(1, "a", {v, v});
  s.add_generator(1, "b", {v, v});
  s.add_generator(1, "c", {v, v});
  const FormalSimplex a{{}, {1, 0}}, b{{}, {1, 1}}, c{{}, {1, 2}};
  s.add_generator(2, "t1", {b, c, a});  // edge path a.b against diagonal c
  s.add_generator(2, "t2", {a, c, b});  // edge path b.a against diagonal c
  return s;
}

SimplicialSetPresentation make_rp2() {
  SimplicialSetPresentation s("rp2");
  s.add_generator(0, "v");
  const FormalSimplex v{{}, {0, 0}};
  s.add_generator(1, "a", {v, v});
  const FormalSimplex a{{}, {1, 0}};
  const FormalSimplex sv{{0}, {0, 0}};
  s.add_generator(2, "t", {a, sv, a});  // boundary 2a, long edge degenerate
  return s;
}

SimplicialSetPresentation make_klein() {
  SimplicialSetPresentation s("klein");
  s.add_generator(0, "v");
  const FormalSimplex v{{}, {0, 0}};
  s.add_generator(1, "a", {v, v});
  s.add_generator(1, "b", {v, v});
  s.add_generator(1, "c", {v, v});
  const FormalSimplex a{{}, {1, 0}}, b{{}, {1, 1}}, c{{}, {1, 2}};
  s.add_generator(2, "t1", {b, c, a});  // a.b = c
  s.add_generator(2, "t2", {c, a, b});  // b.c = a
  return s;
}

// Truncated classifying space of the order-2 group: one generator x_k per
// dimension 1..n, with d_0 x_k = d_k x_k = x_{k-1} and every inner face
// degenerate. nerve_z2(2) is the projective plane, nerve_z2(3) the 3-space.
SimplicialSetPresentation make_nerve_z2(int n) {
  SimplicialSetPresentation s("nerve_z2(" + std::to_string(n) + ")");
  s.add_generator(0, "v");
  for (int k = 1; k <= n; ++k) {
    const FormalSimplex below{{}, {k - 1, 0}};
    std::vector<FormalSimplex> faces(k + 1, below);
    for (int i = 1; i < k; ++i) faces[i] = FormalSimplex{{i - 1}, {k - 2, 0}};
    s.add_generator(k, "x" + std::to_string(k), std::move(faces));
  }
  return s;
}

SimplicialSetPresentation make_wedge(int k) {
  SimplicialSetPresentation s("wedge_circles(" + std::to_string(k) + ")");
  s.add_generator(0, "v");
  const FormalSimplex v{{}, {0, 0}};
  for (int i = 1; i <= k; ++i) s.add_generator(1, "e" + std::to_string(i), {v, v});
  return s;
}

SimplicialSetPresentation make_delta(int n) {
  SimplicialSetPresentation s("delta(" + std::to_string(n) + ")");
  // generators: nonempty vertex subsets of {0..n}, named by their digit strings
  std::vector<std::vector<std::vector<int>>> subsets(n + 1);
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    subsets[static_cast<int>(verts.size()) - 1].push_back(verts);
  }
  auto name_of = [](const std::vector<int>& verts) {
    std::string id;
    for (int v : verts) id += std::to_string(v);
    return id;
  };
  for (int d = 0; d <= n; ++d) {
    std::sort(subsets[d].begin(), subsets[d].end());
    for (const auto& verts : subsets[d]) {
      std::vector<FormalSimplex> faces;
      if (d >= 1)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> sub = verts;
          sub.erase(sub.begin() + i);
          auto& lower = subsets[d - 1];
          const int idx =
              static_cast<int>(std::lower_bound(lower.begin(), lower.end(), sub) - lower.begin());
          faces.push_back(FormalSimplex{{}, {d - 1, idx}});
        }
      s.add_generator(d, name_of(verts), std::move(faces));
    }
  }
  return s;
}

int parse_param(const std::string& name, const std::string& prefix) {
  // name == prefix "(" digits ")"
  const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
    throw input_error("bad parameter in '" + name + "'");
  return std::stoi(inner);
}

}  // namespace

SimplicialSetPresentation builtin(const std::string& name) {
  if (name == "point") return make_point();
  if (name == "circle") return make_circle();
  if (name == "torus") return make_torus();
  if (name == "rp2") return make_rp2();
  if (name == "klein") return make_klein();
  auto param_form = [&](const std::string& prefix) {
    return name.size() > prefix.size() + 2 && name.rfind(prefix + "(", 0) == 0 &&
           name.back() == ')';
  };
  if (param_form("sphere")) {
    const int n = parse_param(name, "sphere");
    if (n < 2 || n > 8) throw input_error("sphere(n) supports 2 <= n <= 8");
    return make_sphere(n);
  }
  if (param_form("wedge_circles")) {
    const int k = parse_param(name, "wedge_circles");
    if (k < 1 || k > 26) throw input_error("wedge_circles(k) supports 1 <= k <= 26");
    return make_wedge(k);
  }
  if (param_form("delta")) {
    const int n = parse_param(name, "delta");
    if (n < 0 || n > 8) throw input_error("delta(n) supports 0 <= n <= 8");
    return make_delta(n);
  }
  if (param_form("nerve_z2")) {
    const int n = parse_param(name, "nerve_z2");
    if (n < 2 || n > 8) throw input_error("nerve_z2(n) supports 2 <= n <= 8");
    return make_nerve_z2(n);
  }
  throw input_error("unknown example '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"point",       "circle",      "sphere(2)",        "sphere(3)",
          "torus",       "rp2",         "klein",            "wedge_circles(2)",
          "wedge_circles(3)",           "delta(2)",         "delta(3)",
          "nerve_z2(3)", "nerve_z2(4)"};
}

SimplicialMap::SimplicialMap(SimplicialSetPresentation S, SimplicialSetPresentation T)
    : S_(std::move(S)), T_(std::move(T)) {
  images_.resize(S_.top_dim() + 1);
  for (int d = 0; d <= S_.top_dim(); ++d)
    images_[d].assign(S_.count(d), FormalSimplex{{}, {-1, -1}});
}

void SimplicialMap::set_image(GenRef g, const FormalSimplex& image) {
  S_.generator(g);
  T_.generator(image.gen);
  if (image.dim() != g.dim)
    throw validation_error("simplicial map image must preserve dimension");
  images_[g.dim][g.idx] = image;
}

FormalSimplex SimplicialMap::image(const FormalSimplex& f) const {
  const FormalSimplex& base = images_[f.gen.dim][f.gen.idx];
  if (base.gen.dim < 0) throw validation_error("simplicial map image not set");
  FormalSimplex out = base;
  for (auto it = f.degeneracies.rbegin(); it != f.degeneracies.rend(); ++it)
    out = T_.degenerate(out, *it);
  return out;
}

Report SimplicialMap::validate() const {
  Report r;
  bool total = true, commutes = true;
  std::string w1, w2;
  for (int d = 0; d <= S_.top_dim(); ++d)
    for (int i = 0; i < S_.count(d); ++i) {
      if (images_[d][i].gen.dim < 0) {
        if (total) w1 = S_.show(GenRef{d, i});
        total = false;
        continue;
      }
      const FormalSimplex self{{}, {d, i}};
      for (int k = 0; k <= d && d >= 1; ++k) {
        const FormalSimplex lhs = image(S_.face(self, k));
        const FormalSimplex rhs = T_.face(image(self), k);
        if (!(lhs == rhs)) {
          if (commutes)
            w2 = S_.show(GenRef{d, i}) + " at face " + std::to_string(k);
          commutes = false;
        }
      }
    }
  r.add("every generator has an image", total, w1);
  r.add("images commute with faces", commutes, w2);
  return r;
}

}  // namespace cobar
