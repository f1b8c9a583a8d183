#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "irk/fixpoint.hpp"
#include "irk/nest_compile.hpp"
#include "irk/semantics.hpp"

using namespace irk;

namespace {

std::vector<int> sorted_positions(const Container& c) {
  std::vector<int> p = c.positions;
  std::sort(p.begin(), p.end());
  return p;
}

// Interprets the compiled code at the container seen as a family, and
// reads the result back as a container.
Container via_code(const NestPtr& n, const Container& c, const CatPtr& cat,
                   const Budget& budget) {
  const CodePtr code = compile_nest(n, cat, budget);
  const FamObject in = container_to_family(c, cat);
  return family_to_container(interpret_obj(code, in, budget));
}

bool same_up_to_renaming(const Container& a, const Container& b) {
  return sorted_positions(a) == sorted_positions(b);
}

}  // namespace

TEST_CASE("each connective compiles to a code with the same action") {
  auto cat = FinCategory::finset(16)->opposite();
  Budget budget;
  Container c{{1, 3, 0}};
  auto cases = std::vector<NestPtr>{
      nest_id(),
      nest_k(Container{{2, 0}}),
      nest_plus(nest_id(), nest_k(Container{{1}})),
      nest_times(nest_id(), nest_id()),
      nest_compose(nest_id(), nest_k(Container{{1, 0}})),
      nest_compose(nest_k(Container{{2}}), nest_id()),
  };
  for (const auto& n : cases) {
    CHECK(same_up_to_renaming(via_code(n, c, cat, budget),
                              interpret_nest(n, c)));
  }
}

TEST_CASE("compiled codes are uniform and functorial") {
  auto cat = FinCategory::finset(16)->opposite();
  Budget budget;
  auto lam = lam_example();
  const CodePtr code = compile_nest(lam, cat, budget);
  CHECK(is_uniform(code, budget));
  Budget small;
  small.max_objects = 2;
  small.max_pair_index = 1;
  std::string why;
  CHECK_MESSAGE(check_code_functorial(code, small, &why), why);
}

TEST_CASE("the compiled lambda signature reproduces the container chain") {
  auto cat = FinCategory::finset(16)->opposite();
  Budget budget;
  budget.max_enum = 2000000;
  auto lam = lam_example();
  Container c0{{}};
  Container c1 = interpret_nest(lam, c0);
  Container c2 = interpret_nest(lam, c1);
  Container c3 = interpret_nest(lam, c2);
  CHECK(same_up_to_renaming(via_code(lam, c0, cat, budget), c1));
  CHECK(same_up_to_renaming(via_code(lam, c1, cat, budget), c2));
  CHECK(same_up_to_renaming(via_code(lam, c2, cat, budget), c3));
}

TEST_CASE("the initial chain of the compiled code matches the nest chain") {
  auto cat = FinCategory::finset(16)->opposite();
  Budget budget;
  budget.max_enum = 2000000;
  auto lam = lam_example();
  const CodePtr code = compile_nest(lam, cat, budget);
  auto result = initial_chain(code, 3, budget);
  REQUIRE(result.stages.size() >= 4);
  CHECK(result.stages[0].index.empty());
  CHECK(result.stages[1].index.size() == 1);
  CHECK(result.stages[2].index.size() == 4);
  CHECK(result.stages[3].index.size() == 26);
  CHECK(result.all_split);
  CHECK_FALSE(result.converged);
  Container c2 = family_to_container(result.stages[2]);
  CHECK(extension_count(c2, 1) == 4);
  CHECK(extension_count(c2, 2) == 9);
}

TEST_CASE("padding preserves the action and aligns spines") {
  auto cat = FinCategory::finset(16)->opposite();
  Budget budget;
  auto n = nest_k(Container{{1, 2}});
  const CodePtr code = compile_nest(n, cat, budget);
  REQUIRE(spine_of(code, budget) == Spine{SpineKind::Sigma});
  const Spine target{SpineKind::Delta, SpineKind::Sigma, SpineKind::Delta};
  const CodePtr padded = pad_to(code, target, budget);
  CHECK(spine_of(padded, budget) == target);
  Container c{{2, 1}};
  const FamObject in = container_to_family(c, cat);
  CHECK(same_up_to_renaming(
      family_to_container(interpret_obj(padded, in, budget)),
      interpret_nest(n, c)));
  CHECK_THROWS_AS(pad_to(padded, {SpineKind::Sigma}, budget), NotUniform);
}

TEST_CASE("non-uniform codes are rejected") {
  auto cat = FinCategory::finset(4)->opposite();
  Budget budget;
  // one branch is a bare leaf, the other a sigma over a leaf
  auto bad = plus_sigma(cat, {Sym::num(0), Sym::num(1)},
                        [cat](const Sym& a) -> CodePtr {
                          if (a.num_value() == 0) return plus_iota(cat, 1);
                          return plus_sigma(cat, {Sym::num(0)},
                                            [cat](const Sym&) {
                                              return plus_iota(cat, 1);
                                            });
                        });
  CHECK_FALSE(is_uniform(bad, budget));
  CHECK_THROWS_AS(spine_of(bad, budget), NotUniform);
  CHECK(is_uniform(plus_iota(cat, 2), budget));
}

TEST_CASE("spine merge is a shortest common supersequence") {
  const Spine s{SpineKind::Sigma};
  const Spine dd{SpineKind::Delta, SpineKind::Delta};
  const Spine ds{SpineKind::Delta, SpineKind::Sigma};
  CHECK(spine_merge(s, s) == s);
  CHECK(spine_merge(ds, dd).size() == 3);
  CHECK(spine_merge(s, dd).size() == 3);
  CHECK(spine_merge({}, ds) == ds);
}
