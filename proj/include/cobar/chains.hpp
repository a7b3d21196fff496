#pragma once

#include <utility>

#include "cobar/fault.hpp"
#include "cobar/formal_sum.hpp"
#include "cobar/homology.hpp"
#include "cobar/simplicial.hpp"

namespace cobar {

using Chain = FormalSum<GenRef>;
using ChainTensor = FormalSum<std::pair<GenRef, GenRef>>;

// Normalized chains of a presented simplicial set with the front/back-face
// coproduct: a differential graded coalgebra. Degenerate faces vanish, so the
// basis in degree n is the set of dimension-n generators.
class DgCoalgebra {
 public:
  // Keeps its own copy of the presentation, so callers may pass temporaries.
  DgCoalgebra(SimplicialSetPresentation S, Ring ring, Fault fault = Fault::None);

  const SimplicialSetPresentation& space() const { return S_; }
  const Ring& ring() const { return ring_; }
  const ChainComplex& complex() const { return complex_; }

  // Alternating face sum with degenerate faces dropped.
  Chain boundary(GenRef g) const;
  Chain boundary(const Chain& c) const;
  // Sum of front_p (x) back_q over p + q = n, degenerate factors dropped.
  ChainTensor coproduct(GenRef g) const;
  ChainTensor coproduct(const Chain& c) const;
  // Augmentation: sum of degree-0 coefficients.
  Coefficient counit(const Chain& c) const;

  Chain chain_of(GenRef g) const { return Chain::single(ring_, g); }

  // Coassociativity, the Koszul-signed coderivation law, and both counit laws,
  // checked exhaustively on generators.
  Report check_coalgebra(ExecMode mode = ExecMode::Serial) const;

  std::string show(const Chain& c) const;
  std::string show(const ChainTensor& t) const;

 private:
  SimplicialSetPresentation S_;
  Ring ring_;
  Fault fault_;
  ChainComplex complex_;
};

}  // namespace cobar
