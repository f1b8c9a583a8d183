#pragma once

#include <variant>

#include "irk/irplus.hpp"

namespace irk {

// A universe of codes closed under a base type and finite sigma-types,
// as a positive code over a finite-sets base category:
//
//   gamma = sigma {base, sig} with
//     base |-> iota (the base type's cardinality)
//     sig  |-> delta_1 F,  F(d) = delta_{Fin d} G,  G(e) = iota (sum e)
//
// The first recursive argument is the first component's code; its decoding
// d feeds the arity of the second delta, whose decodings are summed.
// Supported bases: the opposite of finite sets (where the decoding is
// contravariant, so arbitrary functions lift) and the core groupoid of
// finite sets (where only bijections need lifting).
CodePtr sigma_universe_code(const CatPtr& cat, int base_card);

// The universe from the normal-forms example: closed under the unit type,
// a base type of the given cardinality, and finite sigma-types, over the
// core groupoid of finite sets.
//
//   gamma = sigma {one, b, sig} with one |-> iota 1, b |-> iota base_card
CodePtr nf_universe_code(const CatPtr& cat, int base_card);

// Why a pi-type universe cannot be presented over a given base: reindexing
// a dependent product along a non-invertible map has no canonical lift.
struct ContravarianceFailure {
  std::string reason;
  int src_obj;    // endpoints of the witnessing morphism, in the base
  int dst_obj;
  MorId witness;  // the morphism with no lift
};

using PiUniverseResult = std::variant<CodePtr, ContravarianceFailure>;

// Attempts to build the pi-type universe (decode of a pi node is the
// product of the component decodings).  Over the core groupoid of finite
// sets every morphism is a bijection and tuples reindex along the inverse,
// so the code exists.  Over finite sets or their opposite, probing small
// morphisms finds one with no lift and the failure is reported instead.
PiUniverseResult pi_universe_code(const CatPtr& cat, int base_card);

}  // namespace irk
