#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cobar/parallel.hpp"
#include "cobar/report.hpp"

namespace cobar {

// Index of a generating simplex: dimension plus position in that dimension.
struct GenRef {
  int dim = 0;
  int idx = 0;
  auto operator<=>(const GenRef&) const = default;
};

// Simplex in Eilenberg-Zilber normal form: a strictly decreasing degeneracy
// word applied to a generator. Every simplex of the presented simplicial set
// has exactly one such expression.
struct FormalSimplex {
  std::vector<int> degeneracies;  // s_{i1} s_{i2} ... with i1 > i2 > ...
  GenRef gen;

  int dim() const { return gen.dim + static_cast<int>(degeneracies.size()); }
  bool is_degenerate() const { return !degeneracies.empty(); }
  auto operator<=>(const FormalSimplex&) const = default;
};

struct Generator {
  std::string id;
  std::vector<FormalSimplex> faces;  // d_0 .. d_n for a generator of dimension n
};

// Finitely presented simplicial set: finitely many generators per dimension,
// faces of generators given as formal simplices. Face/degeneracy operators on
// arbitrary formal simplices are derived from the simplicial identities.
class SimplicialSetPresentation {
 public:
  explicit SimplicialSetPresentation(std::string name) : name_(std::move(name)) {}

  int add_generator(int dim, const std::string& id, std::vector<FormalSimplex> faces = {});

  const std::string& name() const { return name_; }
  int top_dim() const { return static_cast<int>(gens_.size()) - 1; }
  int count(int dim) const {
    return (dim >= 0 && dim <= top_dim()) ? static_cast<int>(gens_[dim].size()) : 0;
  }
  const Generator& generator(GenRef g) const;
  bool is_reduced() const { return count(0) == 1; }

  // Total face operator, via d_i s_j rewriting down to stored generator faces.
  FormalSimplex face(const FormalSimplex& f, int i) const;
  // s_j applied to a formal simplex, renormalized.
  FormalSimplex degenerate(const FormalSimplex& f, int j) const;
  // k-th vertex, as a dimension-0 generator reference.
  GenRef vertex(const FormalSimplex& f, int k) const;
  // Front p-face / back q-face (initial/final vertex ranges).
  FormalSimplex front_face(const FormalSimplex& f, int p) const;
  FormalSimplex back_face(const FormalSimplex& f, int q) const;

  // Structural soundness: ids, face dimensions, degeneracy words, and the
  // simplicial identities d_i d_j = d_{j-1} d_i for i < j on every generator.
  Report validate(ExecMode mode = ExecMode::Serial) const;

  // Lookup by generator id; throws input_error when missing/ambiguous.
  GenRef lookup(const std::string& id) const;

  std::string show(GenRef g) const { return generator(g).id; }
  std::string show(const FormalSimplex& f) const;
  FormalSimplex parse_face_expr(const std::string& text) const;

 private:
  std::string name_;
  std::vector<std::vector<Generator>> gens_;
};

// Builtin models; names as listed by builtin_names() plus the parameterized
// forms sphere(n), wedge_circles(k), delta(n).
SimplicialSetPresentation builtin(const std::string& name);
std::vector<std::string> builtin_names();

// Dimension-preserving generator assignment S -> T inducing a map of
// simplicial sets; validated by checking faces commute.
class SimplicialMap {
 public:
  // Owns copies of both presentations; temporaries are fine.
  SimplicialMap(SimplicialSetPresentation S, SimplicialSetPresentation T);

  void set_image(GenRef g, const FormalSimplex& image);
  FormalSimplex image(const FormalSimplex& f) const;

  const SimplicialSetPresentation& source() const { return S_; }
  const SimplicialSetPresentation& target() const { return T_; }

  // Every generator has an image of its dimension and images commute with faces.
  Report validate() const;

 private:
  SimplicialSetPresentation S_;
  SimplicialSetPresentation T_;
  std::vector<std::vector<FormalSimplex>> images_;  // by [dim][idx]
};

}  // namespace cobar
