#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "irk/fam.hpp"

namespace irk {

struct IRPlusCode;
struct CodeMorphism;
using CodePtr = std::shared_ptr<const IRPlusCode>;
using CodeMorPtr = std::shared_ptr<const CodeMorphism>;

// An assignment of decodings to an arity set: one base-category object id
// per arity element, aligned with the arity vector.
using ObjFamily = std::vector<int>;
// A componentwise morphism between two such assignments.
using MorFamily = std::vector<MorId>;

// The continuation of a positive delta code: functorial in the decodings.
// on_obj gives the code at an assignment; on_mor lifts a componentwise
// base morphism src -> dst to a code morphism on_obj(src) -> on_obj(dst).
struct CodeFunctor {
  CatPtr cat;
  std::vector<Sym> arity;
  std::function<CodePtr(const ObjFamily&)> on_obj;
  std::function<CodeMorPtr(const ObjFamily& src, const ObjFamily& dst,
                           const MorFamily&)>
      on_mor;
};

// Positive codes.  Same three shapes as the plain codes, except delta's
// continuation is a functor of the recursive decodings rather than a bare
// function, which is what makes the denoted endofunctor act on all family
// morphisms instead of only the split-cartesian ones.
struct IRPlusCode {
  enum class Tag { Iota, Sigma, Delta };

  Tag tag;
  CatPtr cat;
  int iota_c = -1;
  std::vector<Sym> sigma_arity;
  std::function<CodePtr(const Sym&)> sigma_branch;
  CodeFunctor delta;
};

// Morphisms between positive codes, defined by the shape of their
// endpoints: iota-to-iota, sigma-to-sigma, delta-to-delta.
struct CodeMorphism {
  enum class Tag { IotaIota, SigmaSigma, DeltaDelta };

  Tag tag;
  CodePtr src;
  CodePtr dst;
  // IotaIota: a base morphism between the decodings
  MorId iota_f = -1;
  // SigmaSigma: alpha maps the source arity into the target arity, and
  // rho(a) relates the branches f(a) -> g(alpha a)
  std::function<Sym(const Sym&)> sigma_alpha;
  std::function<CodeMorPtr(const Sym&)> sigma_rho;
  // DeltaDelta (delta_A F -> delta_B G): alpha maps B back into A, and
  // rho(h), for an assignment h over A, relates F(h) -> G(h . alpha)
  std::function<Sym(const Sym&)> delta_alpha;
  std::function<CodeMorPtr(const ObjFamily&)> delta_rho;
};

CodePtr plus_iota(CatPtr cat, int c);
CodePtr plus_sigma(CatPtr cat, std::vector<Sym> arity,
                   std::function<CodePtr(const Sym&)> branch);
CodePtr plus_delta(CodeFunctor f);

CodeMorPtr mor_iota_iota(CodePtr src, CodePtr dst, MorId f);
CodeMorPtr mor_sigma_sigma(CodePtr src, CodePtr dst,
                           std::function<Sym(const Sym&)> alpha,
                           std::function<CodeMorPtr(const Sym&)> rho);
CodeMorPtr mor_delta_delta(CodePtr src, CodePtr dst,
                           std::function<Sym(const Sym&)> alpha,
                           std::function<CodeMorPtr(const ObjFamily&)> rho);

// The identity code morphism, built by recursion on the code.
CodeMorPtr id_plus(const CodePtr& code);

// The identity-shaped morphism between two codes that are extensionally
// the same but built separately.  Throws ShapeMismatch where the codes
// actually differ.
CodeMorPtr structural_identity(const CodePtr& src, const CodePtr& dst);

// Composition of code morphisms; throws ShapeMismatch if the tags of the
// middle codes disagree.
CodeMorPtr compose_plus(const CodeMorPtr& g, const CodeMorPtr& f);

// Restricts the assignment h (over the arity of 'from') along alpha (the
// index map of a delta-to-delta morphism into 'to_arity').
ObjFamily restrict_along(const std::vector<Sym>& from_arity,
                         const ObjFamily& h,
                         const std::vector<Sym>& to_arity,
                         const std::function<Sym(const Sym&)>& alpha);
MorFamily restrict_mors_along(const std::vector<Sym>& from_arity,
                              const MorFamily& h,
                              const std::vector<Sym>& to_arity,
                              const std::function<Sym(const Sym&)>& alpha);

// Enumerates the assignments of the arity set into objects 0..max_obj-1.
std::vector<ObjFamily> enumerate_obj_families(int arity_size, int max_obj,
                                              const Budget& budget);

// Extensional equality of codes at a budget: same shape, same decodings,
// and equal continuations on every assignment with objects below
// budget.max_objects.
bool code_equal(const CodePtr& a, const CodePtr& b, const Budget& budget);
bool code_mor_equal(const CodeMorPtr& a, const CodeMorPtr& b,
                    const Budget& budget);

// Checks that the continuation of every delta in a code is functorial:
// identities map to identity code morphisms and composition is preserved,
// on all assignments within the budget.
bool check_code_functorial(const CodePtr& code, const Budget& budget,
                           std::string* failure = nullptr);

// Position of a Sym in an arity vector; throws ShapeMismatch if absent.
int arity_position(const std::vector<Sym>& arity, const Sym& a);

}  // namespace irk
