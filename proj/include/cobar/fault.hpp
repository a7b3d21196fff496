#pragma once

#include <string>

#include "cobar/errors.hpp"

namespace cobar {

// Deliberate sign corruptions used by tests and `selftest --inject-fault` to
// demonstrate that the checkers catch convention errors.
enum class Fault {
  None,
  AwSign,        // negate the p == 1 terms of the AW coproduct
  CobarLeibniz,  // drop the Koszul sign in the derivation extension of D
  NablaShuffle,  // negate shuffle terms that apply at least one front face
  EzSign,        // negate odd-permutation terms of the shuffle chain
};

inline Fault parse_fault(const std::string& text) {
  if (text.empty() || text == "none") return Fault::None;
  if (text == "aw-sign") return Fault::AwSign;
  if (text == "cobar-leibniz") return Fault::CobarLeibniz;
  if (text == "nabla-shuffle") return Fault::NablaShuffle;
  if (text == "ez-sign") return Fault::EzSign;
  throw input_error("unknown fault '" + text +
                    "' (expected aw-sign, cobar-leibniz, nabla-shuffle, ez-sign)");
}

}  // namespace cobar
