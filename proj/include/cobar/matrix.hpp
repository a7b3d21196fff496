#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobar/ring.hpp"

namespace cobar {

// Sparse matrix over a fixed ring; entries indexed (row, col), zeros pruned.
class SparseMatrix {
 public:
  SparseMatrix(Ring r, int rows, int cols);
  static SparseMatrix identity(Ring r, int n);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return e_.size(); }

  Coefficient get(int i, int j) const;
  void set(int i, int j, const Coefficient& c);
  void add_to(int i, int j, const Coefficient& c);

  const std::map<std::pair<int, int>, Coefficient>& entries() const { return e_; }

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-() const;
  SparseMatrix transpose() const;
  bool operator==(const SparseMatrix& o) const;
  bool is_zero() const { return e_.empty(); }

  std::string to_string() const;

 private:
  void check_index(int i, int j) const;
  Ring ring_;
  int rows_, cols_;
  std::map<std::pair<int, int>, Coefficient> e_;
};

// Rank by exact Gaussian elimination over the fraction field (Q for ring Z).
int rank(const SparseMatrix& m);

// Exact determinant (square matrices; over Z uses fraction-free elimination).
Coefficient determinant(const SparseMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
// Ring must be Z.
struct SmithResult {
  SparseMatrix U, D, V;
  std::vector<mpz_class> diagonal;  // nonzero diagonal entries in order

  // Recomputes U*M*V == D, checks the divisibility chain and |det U| = |det V| = 1.
  bool verify(const SparseMatrix& M, std::string* why = nullptr) const;
};

SmithResult smith_normal_form(const SparseMatrix& M);

}  // namespace cobar
