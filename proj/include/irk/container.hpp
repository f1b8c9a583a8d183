#pragma once

#include <memory>
#include <vector>

#include "irk/fam.hpp"

namespace irk {

// A (finite) container: a set of shapes, each with finitely many
// positions.  Shape s is the index into the vector; positions[s] is the
// number of positions of that shape.
struct Container {
  std::vector<int> positions;

  int shapes() const { return static_cast<int>(positions.size()); }
};

bool container_equal(const Container& a, const Container& b);

// Number of elements of the container's extension at a set of the given
// cardinality: the sum over shapes of x^positions.
long long extension_count(const Container& c, long long x_card);

// The extension itself, with structured elements (shape (p0 ... pk)): a
// shape paired with one of the xs per position.  Throws BudgetExceeded
// past budget.max_enum.
std::vector<Sym> extension_elements(const Container& c,
                                    const std::vector<Sym>& xs,
                                    const Budget& budget);

// Coproduct: shapes side by side.
Container cont_coproduct(const Container& a, const Container& b);
// Product: pairs of shapes, positions added.
Container cont_product(const Container& a, const Container& b);
// Composition: a shape of a together with a b-shape per position; the
// positions are all the b-positions that occur.
Container cont_compose(const Container& a, const Container& b);

// Expressions for container functors: the identity, a constant, sums,
// products, and composition.
struct NestExpr;
using NestPtr = std::shared_ptr<const NestExpr>;

struct NestExpr {
  enum class Tag { Id, K, Plus, Times, Compose };
  Tag tag;
  Container constant;  // K
  NestPtr lhs, rhs;    // Plus / Times / Compose
};

NestPtr nest_id();
NestPtr nest_k(Container c);
NestPtr nest_plus(NestPtr a, NestPtr b);
NestPtr nest_times(NestPtr a, NestPtr b);
NestPtr nest_compose(NestPtr a, NestPtr b);

// Evaluates the expression on a container.
Container interpret_nest(const NestPtr& n, const Container& c);

// Counts the extension of interpret_nest(n, c) at a set of the given
// cardinality without building the composite container, using the
// extension laws of each connective (composition evaluates the outer
// extension at the inner count).  An independent cross-check.
long long direct_nest_count(const NestPtr& n, const Container& c,
                            long long x_card);

// The lambda-term signature: a constant leaf, a pair of subterms, or a
// subterm under a binder (one fresh position, modelled by composing with
// the two-shape container {1, 0}).
NestPtr lam_example();

// Containers are the same thing as families over the opposite of finite
// sets: shape s becomes index value (num s) with its position count as
// the fibre.  cat must be finset-like with object ids read as cardinalities.
FamObject container_to_family(const Container& c, const CatPtr& cat);
Container family_to_container(const FamObject& x);

}  // namespace irk
