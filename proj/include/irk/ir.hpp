#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "irk/fam.hpp"

namespace irk {

struct IRCode;
using IRCodePtr = std::shared_ptr<const IRCode>;

// Codes for inductive-recursive definitions over a base category.  A code
// denotes an endofunctor on families over that category:
//   iota c     -- a single constructor with decoding c
//   sigma A f  -- a constructor argument drawn from the finite set A,
//                 continuing with f(a)
//   delta A F  -- A-many recursive arguments; the rest of the code may
//                 depend on their decodings, via F
struct IRCode {
  enum class Tag { Iota, Sigma, Delta };

  Tag tag;
  CatPtr cat;
  // Iota
  int iota_c = -1;  // object id of cat
  // Sigma / Delta: the finite arity set A
  std::vector<Sym> arity;
  // Sigma: branch per element of A
  std::function<IRCodePtr(const Sym&)> sigma_branch;
  // Delta: continuation given the decodings of the recursive arguments,
  // one object id per element of A (aligned with arity)
  std::function<IRCodePtr(const std::vector<int>&)> delta_fn;
};

IRCodePtr ir_iota(CatPtr cat, int c);
IRCodePtr ir_sigma(CatPtr cat, std::vector<Sym> arity,
                   std::function<IRCodePtr(const Sym&)> branch);
IRCodePtr ir_delta(CatPtr cat, std::vector<Sym> arity,
                   std::function<IRCodePtr(const std::vector<int>&)> fn);

// Enumerates all functions from a set of n positions into the index of x,
// i.e. the recursive-argument choices g : A -> X.  Each entry of a result
// is a position in x.index.  Throws BudgetExceeded past budget.max_enum.
std::vector<std::vector<int>> enumerate_assignments(int n, const FamObject& x,
                                                    const Budget& budget);

// Object action of the endofunctor named by a code.  Index values are
// canonical: iota yields "*", a sigma branch 'a' wraps inner values as
// (a inner), a delta summand g wraps them as ((g a0 ... g ak) inner).
FamObject interpret_ir_obj(const IRCodePtr& code, const FamObject& x,
                           const Budget& budget);

// Morphism action.  Only split-cartesian inputs are supported: a delta
// continuation applied to different decodings yields unrelated codes, so a
// genuine fibre component has nowhere to go.  Throws NonSplitInput.
FamMorphism interpret_ir_mor(const IRCodePtr& code, const FamMorphism& m,
                             const Budget& budget);

}  // namespace irk
