#pragma once

#include "irk/container.hpp"
#include "irk/irplus.hpp"

namespace irk {

// The spine of a code: the sequence of constructor kinds on the path from
// the root to the iota leaves.  A code is uniform when every branch and
// every delta continuation has the same spine; all codes produced by the
// nest compiler are uniform by construction.
enum class SpineKind { Sigma, Delta };
using Spine = std::vector<SpineKind>;

// Computes the spine, probing delta continuations on assignments within
// the budget; throws NotUniform if branches disagree.
Spine spine_of(const CodePtr& code, const Budget& budget);
bool is_uniform(const CodePtr& code, const Budget& budget);

// Replaces every iota leaf of a code.  leaf maps the decoding to the new
// subcode; leaf_mor must map a base morphism c -> d to a code morphism
// leaf(c) -> leaf(d), so that delta continuations stay functorial.
CodePtr subst_iota(const CodePtr& code,
                   const std::function<CodePtr(int)>& leaf,
                   const std::function<CodeMorPtr(MorId)>& leaf_mor);

// The same substitution on a code morphism: new_src / new_dst are the
// already-substituted endpoints (structurally parallel to cm's own), and
// leaf_mor maps each iota-to-iota payload to a morphism between the
// corresponding substituted leaves.
CodeMorPtr subst_iota_mor(const CodeMorPtr& cm, const CodePtr& new_src,
                          const CodePtr& new_dst,
                          const std::function<CodeMorPtr(MorId)>& leaf_mor);

// Pointwise product of two codes: every leaf of a is paired with every
// leaf of b, decodings combined by the base category's product.  The
// result's spine is the concatenation of the two spines.
CodePtr times_code(const CodePtr& a, const CodePtr& b);

// The K-fold exponential of a family of codes sharing the given spine:
// sigma arities multiply into tuples, delta arities sum into tagged
// unions, and leaf decodings combine by the base product.  The empty
// family yields the terminal leaf padded out to the spine.
CodePtr exp_family(const CatPtr& cat, const std::vector<CodePtr>& family,
                   const Spine& spine);
CodeMorPtr exp_family_mor(const CatPtr& cat,
                          const std::vector<CodeMorPtr>& family,
                          const Spine& spine);
// Reindexing of an exponential along u : K' -> K (u[j] picks the source
// factor for target slot j): a morphism exp(family) -> exp(family . u).
CodeMorPtr exp_reindex(const CatPtr& cat, const std::vector<CodePtr>& family,
                       const std::vector<int>& u, const Spine& spine);

// Composition of container functors on codes: every leaf of a, with
// decoding c, becomes the c-fold exponential of b.
CodePtr bullet(const CodePtr& a, const CodePtr& b);

// Pads a code to a longer spine by inserting neutral layers: a singleton
// sigma for a sigma slot, an empty delta for a delta slot.  target must be
// a supersequence of the code's own spine.
CodePtr pad_to(const CodePtr& code, const Spine& target, const Budget& budget);

// Uniform sum: pads both arguments to the shortest common supersequence
// of their spines, then branches over a two-element sigma.
CodePtr plus_uniform(const CodePtr& a, const CodePtr& b, const Budget& budget);

// Shortest common supersequence of two spines.
Spine spine_merge(const Spine& a, const Spine& b);

// Compiles a nest expression to a uniform positive code over the opposite
// of finite sets, such that interpreting the code at a container (seen as
// a family) yields the container the expression computes, up to the
// canonical renaming of shapes.
CodePtr compile_nest(const NestPtr& n, const CatPtr& cat,
                     const Budget& budget);

}  // namespace irk
