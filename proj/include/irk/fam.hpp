#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irk/fincat.hpp"
#include "irk/sym.hpp"

namespace irk {

// An object (X, P) of the category of families over a base category: a
// finite index set X of symbolic values together with a fibre object P(x)
// for each of them.  The index is kept sorted and duplicate-free so that
// object equality and membership are cheap.
struct FamObject {
  CatPtr cat;
  std::vector<Sym> index;  // sorted, unique
  std::vector<int> fibre;  // fibre[i] is an object id of cat

  int size() const { return static_cast<int>(index.size()); }
  // Position of x in the index, or nullopt.
  std::optional<int> find(const Sym& x) const;
  int find_or_throw(const Sym& x) const;
  std::string str() const;
};

// Builds a family from possibly unsorted entries; throws ShapeMismatch on
// duplicate index values.
FamObject make_fam(CatPtr cat, std::vector<std::pair<Sym, int>> entries);

bool fam_obj_equal(const FamObject& a, const FamObject& b);

// A morphism (h, k) : (X, P) -> (Y, Q).  h sends index position i to
// on_index[i]; k gives, per position, a base morphism P(x_i) -> Q(h x_i).
struct FamMorphism {
  FamObject src;
  FamObject dst;
  std::vector<int> on_index;    // per src position: a dst position
  std::vector<MorId> on_fibre;  // per src position: P(x) -> Q(h x)

  // Image of an index value under h.
  Sym apply(const Sym& x) const;
  std::string str() const;
};

// Validates endpoints of every fibre component; throws EndpointMismatch.
void check_fam_morphism(const FamMorphism& m);

FamMorphism fam_identity(const FamObject& x);
FamMorphism fam_compose(const FamMorphism& g, const FamMorphism& f);
bool fam_mor_equal(const FamMorphism& a, const FamMorphism& b);

// A morphism is split cartesian when every fibre component is an identity:
// it only renames index values, leaving the fibres untouched.
bool is_split_cartesian(const FamMorphism& m);

// Builds a morphism from an index-value function plus a per-value fibre map.
FamMorphism make_fam_morphism(
    const FamObject& src, const FamObject& dst,
    const std::function<Sym(const Sym&)>& h,
    const std::function<MorId(const Sym&)>& k);

// Builds a split-cartesian morphism from an index-value function alone.
FamMorphism make_split_morphism(const FamObject& src, const FamObject& dst,
                                const std::function<Sym(const Sym&)>& h);

// Coproduct of families, with injections.  taggers[i] wraps an index value
// of parts[i] into its tag in the sum; tagged values must be globally
// distinct.  The injections are split cartesian.
struct FamCoproduct {
  FamObject sum;
  std::vector<FamMorphism> injections;
};
// The sum alone, without materialising the injections; linear in the
// total size where the full coproduct is quadratic.
FamObject fam_sum(const CatPtr& cat, const std::vector<FamObject>& parts,
                  const std::vector<std::function<Sym(const Sym&)>>& taggers);

FamCoproduct fam_coproduct(
    const CatPtr& cat, const std::vector<FamObject>& parts,
    const std::vector<std::function<Sym(const Sym&)>>& taggers);

// An isomorphism presented by both directions.
struct FamIso {
  FamMorphism fwd;
  FamMorphism bwd;
};

// Checks that fwd and bwd really are mutually inverse.
bool check_fam_iso(const FamIso& iso, std::string* failure = nullptr);

// The empty family over a category.
FamObject fam_empty(const CatPtr& cat);

}  // namespace irk
