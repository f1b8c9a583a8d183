#pragma once

#include "irk/oracle.hpp"

namespace irk {

// The initial chain of the functor named by a code: stage 0 is the empty
// family, stage j+1 applies the functor to stage j, and the connecting
// morphisms are the functor's action on the previous connection (starting
// from the unique map out of the empty family).
struct FixpointResult {
  std::vector<FamObject> stages;      // stages[0] is empty
  std::vector<FamMorphism> connect;   // connect[j] : stages[j] -> stages[j+1]
  bool all_split = true;              // every connection is split cartesian
  bool converged = false;
  int fixed_at = -1;  // first j with stages[j] == stages[j+1] via identity
};

// Runs the chain for at most max_stages applications.  Stops early once a
// fixed point is reached.  Throws BudgetExceeded if a stage outgrows the
// enumeration budget.
FixpointResult initial_chain(const CodePtr& code, int max_stages,
                             const Budget& budget);

// The unique algebra morphism out of a converged chain's fixed point.
// algebra must be a morphism from the interpretation of the code at its
// target family into that family.  Computed by iterating
// f |-> algebra . F(f) from the empty map until it stabilises; throws
// NotConverged if the chain has no fixed point or the iteration does not
// settle within the chain length plus a margin.
FamMorphism fold_from_chain(const CodePtr& code, const FixpointResult& chain,
                            const FamMorphism& algebra, const Budget& budget);

// --- normal forms for the unit/base/sigma universe ---------------------
//
// Elements of that universe's stages are terms: (one *), (b *), or
// (sig ((a) ((e0 ... ek) *))) with a and the ei terms again.  The helpers
// below work on the term grammar directly, so they also apply to terms
// beyond any enumerated stage.

// Cardinality of the decoding of a term.
int decode_card(const Sym& term, int base_card);

// Whether a term is a normal form: unit and base types are, a pair-former
// is only when its first component is the base type and its second
// components all are.
bool nf_predicate(const Sym& term, int base_card);

// A term's normal form plus the witnessing bijection between decodings
// (iso[i] is the image in the normal form's decoding of element i).
struct NfResult {
  Sym nf;
  std::vector<int> iso;
};
NfResult nf_normalize(const Sym& term, int base_card);

// The family of normal forms of a stage's elements (deduplicated), with
// their decodings as fibres.
FamObject nf_image(const FamObject& stage, int base_card);

// The normalisation morphism from a stage onto its normal forms, with the
// correctness bijections as fibre components.
FamMorphism nf_morphism(const FamObject& stage, int base_card);

// Checks the algebra-homomorphism square for normalisation: applying the
// functor to the normalisation morphism and then normalising once more
// agrees with normalising directly.  stage_index picks the chain stage the
// square is based at.
SuiteReport check_nf_algebra_square(const CodePtr& code,
                                    const FixpointResult& chain,
                                    int stage_index, int base_card,
                                    const Budget& budget);

// --- transporting a universe along a map of base types ------------------

// The code morphism between two sigma-type universes induced by a function
// f between their base types (f maps the b1-element base into the
// b2-element one; over the opposite of finite sets this relates the
// universe with base b2 to the one with base b1).
CodeMorPtr ground_code_morphism(const CatPtr& cat, int b1, int b2,
                                const std::vector<int>& f);

// The stagewise map between the two universes' chains induced by f,
// evaluated at the given stage.
FamMorphism ground_map_fold(const CatPtr& cat, int b1, int b2,
                            const std::vector<int>& f, int stages,
                            const Budget& budget);

}  // namespace irk
