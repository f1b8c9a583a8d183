#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irk/semantics.hpp"

namespace irk {

// One failed check: the offending input plus both sides of the equation.
struct CaseFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string name;
  int cases = 0;
  std::vector<CaseFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct Report {
  std::string version = "1";
  std::vector<SuiteReport> suites;
  bool ok() const;
  nlohmann::json to_json() const;
};

// All families over the category with index {0..k-1} for k up to
// budget.max_index and fibres drawn from objects 0..budget.max_objects-1.
std::vector<FamObject> enumerate_fam_objects(const CatPtr& cat,
                                             const Budget& budget);

// All family morphisms x -> y, i.e. every index map paired with every
// choice of fibre components.  Throws BudgetExceeded past budget.max_enum.
std::vector<FamMorphism> enumerate_fam_morphisms(const FamObject& x,
                                                 const FamObject& y,
                                                 const Budget& budget);

// Checks that the functor denoted by a positive code preserves identities
// and composition on all enumerated families and morphisms (pairs drawn
// from index sizes up to budget.max_pair_index to keep the composition
// search tractable).
SuiteReport check_endofunctor_laws(const CodePtr& code, const Budget& budget);

// Checks the naturality square of an interpreted code morphism on all
// enumerated family morphisms.
SuiteReport check_naturality(const CodeMorPtr& cm, const Budget& budget);

// Whether two fibre objects are isomorphic, and a witness if they are.
std::optional<MorId> find_object_iso(const CatPtr& cat, int a, int b,
                                     const Budget& budget);

// Searches for an isomorphism of families: a bijection of index values
// pairing isomorphic fibres.  Complete at the budget: since index values
// carry no structure, any class-respecting pairing works, so failure to
// find one means none exists.
std::optional<FamIso> find_iso(const FamObject& x, const FamObject& y,
                               const Budget& budget);

}  // namespace irk
