#pragma once

#include "irk/ir.hpp"
#include "irk/irplus.hpp"

namespace irk {

// Object action of the endofunctor denoted by a positive code.  Canonical
// index values follow the same scheme as the plain codes: "*" under iota,
// (a inner) under a sigma branch, ((g a0 ... g ak) inner) under a delta
// summand.  The tags only mention index values of x, never positions, so
// families that agree on shared index values produce literally shared tags.
FamObject interpret_obj(const CodePtr& code, const FamObject& x,
                        const Budget& budget);

// Morphism action on an arbitrary family morphism.  For a delta summand g
// the component is the interpretation of the lifted code morphism
// F(P.g) -> F(Q.h.g) (the continuation applied to the fibre components of
// m along g) followed by the recursive action on the continuation code.
FamMorphism interpret_mor(const CodePtr& code, const FamMorphism& m,
                          const Budget& budget);

// Interpretation of a code morphism at a family: a natural family of maps
// between the two denoted functors, evaluated at x.
FamMorphism interpret_code_mor(const CodeMorPtr& cm, const FamObject& x,
                               const Budget& budget);

}  // namespace irk
