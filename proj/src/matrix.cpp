#include "cobar/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "cobar/errors.hpp"

namespace cobar {

SparseMatrix::SparseMatrix(Ring r, int rows, int cols) : ring_(r), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw validation_error("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(Ring r, int n) {
  SparseMatrix m(r, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Coefficient::one(r));
  return m;
}

void SparseMatrix::check_index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw validation_error("matrix index out of range");
}

Coefficient SparseMatrix::get(int i, int j) const {
  check_index(i, j);
  auto it = e_.find({i, j});
  return it == e_.end() ? Coefficient::zero(ring_) : it->second;
}

void SparseMatrix::set(int i, int j, const Coefficient& c) {
  check_index(i, j);
  if (c.ring() != ring_) throw validation_error("ring mismatch in matrix set");
  if (c.is_zero()) e_.erase({i, j});
  else e_[{i, j}] = c;
}

void SparseMatrix::add_to(int i, int j, const Coefficient& c) { set(i, j, get(i, j) + c); }

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (ring_ != o.ring_ || cols_ != o.rows_) throw validation_error("matrix product shape/ring mismatch");
  SparseMatrix out(ring_, rows_, o.cols_);
  // group right factor by row
  std::map<int, std::vector<std::pair<int, Coefficient>>> right;
  for (const auto& [ij, c] : o.e_) right[ij.first].push_back({ij.second, c});
  for (const auto& [ij, c] : e_) {
    auto it = right.find(ij.second);
    if (it == right.end()) continue;
    for (const auto& [k, c2] : it->second) out.add_to(ij.first, k, c * c2);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw validation_error("matrix sum shape/ring mismatch");
  SparseMatrix out(*this);
  for (const auto& [ij, c] : o.e_) out.add_to(ij.first, ij.second, c);
  return out;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix out(ring_, rows_, cols_);
  for (const auto& [ij, c] : e_) out.set(ij.first, ij.second, -c);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(ring_, cols_, rows_);
  for (const auto& [ij, c] : e_) out.set(ij.second, ij.first, c);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << get(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

int rank(const SparseMatrix& m) {
  const Ring field = m.ring().kind() == Ring::Kind::Integers ? Ring::rationals() : m.ring();
  std::vector<std::vector<Coefficient>> a(
      m.rows(), std::vector<Coefficient>(m.cols(), Coefficient::zero(field)));
  for (const auto& [ij, c] : m.entries())
    a[ij.first][ij.second] =
        field == c.ring() ? c : Coefficient::fraction(field, c.numerator(), c.denominator());
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!a[i][col].is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const Coefficient inv = a[r][col].inverse();
    for (int i = r + 1; i < m.rows(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Coefficient f = a[i][col] * inv;
      for (int j = col; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Coefficient determinant(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("determinant of non-square matrix");
  const int n = m.rows();
  const Ring field = m.ring().kind() == Ring::Kind::Integers ? Ring::rationals() : m.ring();
  std::vector<std::vector<Coefficient>> a(n, std::vector<Coefficient>(n, Coefficient::zero(field)));
  for (const auto& [ij, c] : m.entries())
    a[ij.first][ij.second] =
        field == c.ring() ? c : Coefficient::fraction(field, c.numerator(), c.denominator());
  Coefficient det = Coefficient::one(field);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].is_zero()) { pivot = i; break; }
    if (pivot < 0) return Coefficient::zero(m.ring());
    if (pivot != col) { std::swap(a[col], a[pivot]); det = -det; }
    det *= a[col][col];
    const Coefficient inv = a[col][col].inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      const Coefficient f = a[i][col] * inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  if (m.ring().kind() == Ring::Kind::Integers)
    return Coefficient(m.ring(), det.integer_value());
  return det;
}

namespace {

// Dense integer workspace for the Smith reduction; row ops mirror into U,
// column ops into V, so U*orig*V stays equal to the work matrix throughout.
struct SmithWork {
  std::vector<std::vector<mpz_class>> a, u, v;
  int rows, cols;

  explicit SmithWork(const SparseMatrix& m) : rows(m.rows()), cols(m.cols()) {
    a.assign(rows, std::vector<mpz_class>(cols, 0));
    for (const auto& [ij, c] : m.entries()) a[ij.first][ij.second] = c.integer_value();
    u.assign(rows, std::vector<mpz_class>(rows, 0));
    v.assign(cols, std::vector<mpz_class>(cols, 0));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;
    for (int j = 0; j < cols; ++j) v[j][j] = 1;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row[i] += q * row[j]
  void add_row(int i, int j, const mpz_class& q) {
    for (int k = 0; k < cols; ++k) a[i][k] += q * a[j][k];
    for (int k = 0; k < rows; ++k) u[i][k] += q * u[j][k];
  }
  // col[i] += q * col[j]
  void add_col(int i, int j, const mpz_class& q) {
    for (int k = 0; k < rows; ++k) a[k][i] += q * a[k][j];
    for (int k = 0; k < cols; ++k) v[k][i] += q * v[k][j];
  }
  void negate_row(int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // Smallest nonzero |entry| in the trailing submatrix starting at t.
  bool find_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    mpz_class best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class m = abs(a[i][j]);
        if (!found || m < best) { found = true; best = m; pi = i; pj = j; }
      }
    return found;
  }
};

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& M) {
  if (M.ring().kind() != Ring::Kind::Integers)
    throw validation_error("Smith normal form requires ring Z");
  SmithWork w(M);
  const int n = std::min(w.rows, w.cols);

  for (int t = 0; t < n; ++t) {
    int pi = t, pj = t;
    if (!w.find_pivot(t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot by Euclidean steps; the smallest-pivot
      // choice guarantees termination.
      bool dirty = false;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.a[i][t] == 0) continue;
        mpz_class q = w.a[i][t] / w.a[t][t];  // truncated
        if (q != 0) w.add_row(i, t, -q);
        if (w.a[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.a[t][j] == 0) continue;
        mpz_class q = w.a[t][j] / w.a[t][t];
        if (q != 0) w.add_col(j, t, -q);
        if (w.a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        int qi = t, qj = t;
        w.find_pivot(t, qi, qj);
        w.swap_rows(t, qi);
        w.swap_cols(t, qj);
        continue;
      }
      // Divisibility: the pivot must divide every remaining entry; if not,
      // fold the offending row in and restart with a smaller pivot.
      bool fixed = true;
      for (int i = t + 1; i < w.rows && fixed; ++i)
        for (int j = t + 1; j < w.cols && fixed; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }

  const Ring Z = Ring::integers();
  SmithResult res{SparseMatrix(Z, w.rows, w.rows), SparseMatrix(Z, w.rows, w.cols),
                  SparseMatrix(Z, w.cols, w.cols), {}};
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < w.rows; ++j)
      if (w.u[i][j] != 0) res.U.set(i, j, Coefficient(Z, w.u[i][j]));
  for (int i = 0; i < w.cols; ++i)
    for (int j = 0; j < w.cols; ++j)
      if (w.v[i][j] != 0) res.V.set(i, j, Coefficient(Z, w.v[i][j]));
  for (int t = 0; t < n; ++t) {
    if (w.a[t][t] == 0) break;
    res.D.set(t, t, Coefficient(Z, w.a[t][t]));
    res.diagonal.push_back(w.a[t][t]);
  }
  return res;
}

bool SmithResult::verify(const SparseMatrix& M, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(U * M * V == D)) return fail("U*M*V != D");
  for (const auto& [ij, c] : D.entries()) {
    if (ij.first != ij.second) return fail("D not diagonal");
    if (c.numerator() < 0) return fail("negative diagonal entry");
  }
  for (std::size_t i = 1; i < diagonal.size(); ++i)
    if (diagonal[i] % diagonal[i - 1] != 0)
      return fail("divisibility chain broken at position " + std::to_string(i));
  Coefficient du = determinant(U), dv = determinant(V);
  if (!(du.is_one() || (-du).is_one())) return fail("U not unimodular, det = " + du.to_string());
  if (!(dv.is_one() || (-dv).is_one())) return fail("V not unimodular, det = " + dv.to_string());
  return true;
}

}  // namespace cobar
