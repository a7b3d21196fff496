#include "cobar/homology.hpp"

#include <sstream>

#include "cobar/errors.hpp"

namespace cobar {

std::string AbelianGroupInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank == 1) { sep(); os << "Z"; }
  else if (free_rank > 1) { sep(); os << "Z^" << free_rank; }
  for (const auto& t : torsion) { sep(); os << "Z/" << t.get_str(); }
  if (first) os << "0";
  return os.str();
}

SparseMatrix ChainComplex::differential_at(int n) const {
  if (n >= 1 && n <= top_dim()) return diff[n];
  return SparseMatrix(ring, dim(n - 1), dim(n));
}

Report ChainComplex::validate_differential(ExecMode mode) const {
  const int top = top_dim();
  std::vector<CheckItem> slots(top >= 1 ? top : 0);
  for_each_slot(slots.size(), mode, [&](std::size_t idx) {
    const int n = static_cast<int>(idx) + 1;  // checks d_n . d_{n+1}
    const SparseMatrix square = differential_at(n) * differential_at(n + 1);
    CheckItem item{"d^2 == 0 from degree " + std::to_string(n + 1), true, ""};
    if (!square.is_zero()) {
      const int col = square.entries().begin()->first.second;
      item.pass = false;
      item.witness = basis[n + 1][col] + " in degree " + std::to_string(n + 1);
    }
    slots[idx] = item;
  });
  Report r;
  for (auto& item : slots) r.items.push_back(std::move(item));
  if (r.items.empty()) r.add("d^2 == 0 (no composable degrees)", true);
  return r;
}

AbelianGroupInvariants homology(const ChainComplex& c, int n) {
  if (n < 0) throw validation_error("homology degree must be >= 0");
  AbelianGroupInvariants inv;
  if (n > c.top_dim()) return inv;

  const SparseMatrix a = c.differential_at(n);      // C_n -> C_{n-1}
  const SparseMatrix b = c.differential_at(n + 1);  // C_{n+1} -> C_n
  if (!(a * b).is_zero()) {
    const SparseMatrix square = a * b;
    const int col = square.entries().begin()->first.second;
    throw validation_error("homology: d^2 != 0 at degree " + std::to_string(n + 1) +
                           ", witness " + c.basis[n + 1][col]);
  }

  const int dim_n = c.dim(n);
  const int r_out = rank(a);
  const int r_in = rank(b);
  inv.free_rank = dim_n - r_out - r_in;
  if (c.ring.kind() == Ring::Kind::Integers) {
    for (const auto& d : smith_normal_form(b).diagonal)
      if (d > 1) inv.torsion.push_back(d);
  }
  return inv;
}

std::vector<AbelianGroupInvariants> homology_range(const ChainComplex& c, int n_max,
                                                   ExecMode mode) {
  std::vector<AbelianGroupInvariants> out(n_max + 1);
  std::vector<std::string> errors(n_max + 1);  // exceptions must not cross worker boundaries
  for_each_slot(out.size(), mode, [&](std::size_t n) {
    try {
      out[n] = homology(c, static_cast<int>(n));
    } catch (const std::exception& e) {
      errors[n] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw validation_error(e);
  return out;
}

}  // namespace cobar
