#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irk/fincat.hpp"

using namespace irk;

TEST_CASE("discrete category laws") {
  auto c = FinCategory::discrete(3);
  CHECK(c->object_count() == 3);
  CHECK(c->check_laws());
  CHECK(c->hom_count(0, 0) == 1);
  CHECK(c->hom_count(0, 1) == 0);
  CHECK(c->opposite() == c);
  CHECK(c->core_groupoid() == c);
}

TEST_CASE("finset hom counts and composition") {
  auto c = FinCategory::finset(4);
  CHECK(c->object_count() == 5);
  CHECK(c->hom_count(2, 3) == 9);
  CHECK(c->hom_count(0, 3) == 1);
  CHECK(c->hom_count(3, 0) == 0);
  CHECK(c->hom(2, 3).size() == 9);

  MorId f = c->intern_function(2, 3, {0, 2});
  MorId g = c->intern_function(3, 2, {1, 1, 0});
  MorId gf = c->compose(g, f);
  CHECK(c->set_function(gf) == std::vector<int>{1, 0});
  CHECK(c->compose(c->identity(3), f) == f);
  CHECK(c->compose(f, c->identity(2)) == f);
  CHECK_THROWS_AS(c->compose(f, f), EndpointMismatch);
  CHECK(c->is_identity(c->identity(4)));
  CHECK_FALSE(c->is_identity(f));
}

TEST_CASE("finset morphism interning is canonical") {
  auto c = FinCategory::finset(3);
  MorId a = c->intern_function(2, 2, {1, 0});
  MorId b = c->intern_function(2, 2, {1, 0});
  CHECK(a == b);
}

TEST_CASE("opposite swaps ends and composition") {
  auto c = FinCategory::finset(3);
  auto op = c->opposite();
  CHECK(op->opposite() == c);
  MorId f = c->intern_function(2, 3, {0, 2});
  CHECK(op->mor_src(f) == 3);
  CHECK(op->mor_dst(f) == 2);
  CHECK(op->hom_count(3, 2) == c->hom_count(2, 3));
  MorId g = c->intern_function(3, 2, {1, 1, 0});
  // in op: f : 3 -> 2, g : 2 -> 3, so f .op g exists
  CHECK(op->compose(f, g) == c->compose(g, f));
  CHECK(op->set_function(f) == c->set_function(f));
}

TEST_CASE("core groupoid keeps only invertibles") {
  auto c = FinCategory::finset(3);
  auto core = c->core_groupoid();
  CHECK(core->hom_count(2, 2) == 2);
  CHECK(core->hom_count(3, 3) == 6);
  CHECK(core->hom_count(2, 3) == 0);
  for (MorId m : core->hom(3, 3)) {
    auto inv = core->find_inverse(m);
    REQUIRE(inv.has_value());
    CHECK(core->is_identity(core->compose(*inv, m)));
    CHECK(core->is_identity(core->compose(m, *inv)));
  }
}

TEST_CASE("hom enumeration cap") {
  auto c = FinCategory::finset(16);
  CHECK_THROWS_AS(c->hom(16, 16), BudgetExceeded);
  CHECK(c->hom_count(16, 2) == 65536);
}

TEST_CASE("products: finset takes cartesian, op finset takes sums") {
  auto c = FinCategory::finset(16);
  CHECK(c->product_object({2, 3}) == 6);
  MorId f = c->intern_function(2, 2, {1, 0});
  MorId g = c->intern_function(2, 2, {0, 0});
  auto p = c->product_morphism({f, g});
  REQUIRE(p.has_value());
  // tuples row-major: (i, j) -> 2*i + j; image of (i,j) is (f i, g j)
  CHECK(c->set_function(*p) == std::vector<int>{2, 2, 0, 0});

  auto op = c->opposite();
  CHECK(op->product_object({2, 3}) == 5);
  auto s = op->product_morphism({f, g});
  REQUIRE(s.has_value());
  CHECK(op->set_function(*s) == std::vector<int>{1, 0, 2, 2});
}

TEST_CASE("hand-built table category") {
  // two objects, one non-identity arrow u : 0 -> 1
  FinCategory::TableData d;
  d.object_names = {"a", "b"};
  d.mor_ends = {{0, 0}, {1, 1}, {0, 1}};
  d.identities = {0, 1};
  d.comp[{0, 0}] = 0;
  d.comp[{1, 1}] = 1;
  d.comp[{2, 0}] = 2;
  d.comp[{1, 2}] = 2;
  auto c = FinCategory::from_table(d);
  CHECK(c->check_laws());
  CHECK(c->hom_count(0, 1) == 1);
  CHECK_FALSE(c->find_inverse(2).has_value());
  auto op = c->opposite();
  CHECK(op->hom_count(1, 0) == 1);
  CHECK(op->hom_count(0, 1) == 0);
  auto core = c->core_groupoid();
  CHECK(core->hom_count(0, 1) == 0);
  CHECK(core->check_laws());
}

TEST_CASE("functor law checking") {
  auto c = FinCategory::finset(2);
  Budget b;
  CHECK(check_cat_functor(identity_functor(c), b));

  auto disc = discretisation(c);
  CHECK(disc->object_count() == c->object_count());
  CHECK(check_cat_functor(discretisation_embedding(c), b));

  // a broken "functor" that collapses everything to Fin 1 but maps
  // morphisms to identities at the wrong object
  CatFunctor bad{c, c, [](int) { return 1; },
                 [&](MorId) { return c->identity(0); }};
  std::string why;
  CHECK_FALSE(check_cat_functor(bad, b, &why));
}

TEST_CASE("structural comparison") {
  auto a = FinCategory::discrete(2);
  auto b = FinCategory::discrete(2);
  auto c = FinCategory::discrete(3);
  CHECK(FinCategory::structurally_equal(a, b));
  CHECK_FALSE(FinCategory::structurally_equal(a, c));
}
