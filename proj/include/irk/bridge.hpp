#pragma once

#include "irk/ir.hpp"
#include "irk/irplus.hpp"

namespace irk {

// Upgrades a plain code to a positive one over the discretisation of its
// base.  Every delta continuation gets the trivial lift: the only
// morphism families over a discrete base are identities, which map to the
// identity code morphism.
CodePtr embed_plain(const IRCodePtr& code);

// Forgets the morphism part of a positive code, yielding a plain code
// over the discretisation of its base.  Only the object parts of the
// delta continuations survive.
IRCodePtr forget_positive(const CodePtr& code);

// Extensional equality of plain codes at a budget.
bool ir_code_equal(const IRCodePtr& a, const IRCodePtr& b,
                   const Budget& budget);

// Checks that forgetting after embedding gives back the original plain
// code, extensionally at the budget.
bool check_round_trip(const IRCodePtr& code, const Budget& budget);

}  // namespace irk
