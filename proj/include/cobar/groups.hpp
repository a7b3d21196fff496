#pragma once

// Finitely presented groups: free words, Tietze simplification, abelian
// invariants through the Smith reduction, and HLT coset enumeration for
// recognizing finite quotients. Small multiplication tables for the Hopf
// layer live here too.

#include <optional>
#include <string>
#include <vector>

#include "cobar/homology.hpp"
#include "cobar/report.hpp"

namespace cobar {

// Letters are nonzero signed generator numbers: k stands for generator k-1,
// -k for its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);

// Least rotation of the cyclic reduction or of its inverse, letters ordered
// by (generator, sign) so that a < a^-1 < b. Conjugate or inverted relators
// share one normal form.
Word relator_canonical(Word w);

struct GroupPresentation {
  std::vector<std::string> names;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(names.size()); }
  std::string show(const Word& w) const;
  std::string to_string() const;

  // "a*b*a^-1*b^-1"; exponents allowed, e.g. "a^2" or "b^-3".
  Word parse_word(const std::string& text) const;
};

// Generator eliminations plus relator cleanup, iterated to a fixed point.
// Deterministic: always eliminates through the shortest eligible relator.
GroupPresentation tietze_reduce(GroupPresentation p);

// Cokernel of the relator exponent matrix.
AbelianGroupInvariants abelianization(const GroupPresentation& p);

// HLT coset enumeration over the trivial subgroup. Returns the group order,
// or nullopt when the table exceeds max_cosets before closing (the group may
// well be infinite; enumeration cannot tell).
std::optional<long> todd_coxeter_order(const GroupPresentation& p, int max_cosets = 10000);

// Multiplication table of a finite group; element 0 is the identity.
struct FiniteGroupTable {
  std::string name;
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> mult;

  int order() const { return static_cast<int>(element_names.size()); }
  int inverse(int a) const;
  Report validate() const;  // identity, unique inverses, associativity
};

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable symmetric_group_3();
FiniteGroupTable quaternion_group_8();

}  // namespace cobar
