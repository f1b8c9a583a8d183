#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irk/bridge.hpp"
#include "irk/semantics.hpp"

using namespace irk;

namespace {

IRCodePtr nat_style_code(const CatPtr& c) {
  return ir_sigma(c, {Sym::atom("z"), Sym::atom("s")}, [c](const Sym& a) {
    if (a == Sym::atom("z")) return ir_iota(c, 1);
    return ir_delta(c, {Sym::atom("r")}, [c](const std::vector<int>& d) {
      return ir_iota(c, d[0]);
    });
  });
}

}  // namespace

TEST_CASE("forgetting after embedding returns the original code") {
  auto c = FinCategory::finset(3);
  Budget b;
  CHECK(check_round_trip(nat_style_code(c), b));
  CHECK(check_round_trip(ir_iota(c, 2), b));
}

TEST_CASE("embedded codes interpret to the same families") {
  auto c = FinCategory::finset(3);
  Budget b;
  auto plain = nat_style_code(c);
  auto positive = embed_plain(plain);
  auto disc = positive->cat;
  auto x = make_fam(disc, {{Sym::num(0), 2}, {Sym::num(1), 3}});
  auto x_plain = make_fam(c, {{Sym::num(0), 2}, {Sym::num(1), 3}});
  CHECK(fam_obj_equal(interpret_obj(positive, x, b),
                      interpret_ir_obj(plain, x_plain, b)));
}

TEST_CASE("embedded codes act on split morphisms like the original") {
  auto c = FinCategory::finset(3);
  Budget b;
  auto plain = nat_style_code(c);
  auto positive = embed_plain(plain);
  auto disc = positive->cat;
  auto x = make_fam(disc, {{Sym::num(0), 2}});
  auto y = make_fam(disc, {{Sym::num(0), 2}, {Sym::num(1), 1}});
  auto m = make_split_morphism(x, y, [](const Sym& s) { return s; });
  auto x_p = make_fam(c, {{Sym::num(0), 2}});
  auto y_p = make_fam(c, {{Sym::num(0), 2}, {Sym::num(1), 1}});
  auto m_p = make_split_morphism(x_p, y_p, [](const Sym& s) { return s; });
  auto lhs = interpret_mor(positive, m, b);
  auto rhs = interpret_ir_mor(plain, m_p, b);
  CHECK(lhs.on_index == rhs.on_index);
  CHECK(fam_obj_equal(lhs.src, rhs.src));
  CHECK(fam_obj_equal(lhs.dst, rhs.dst));
}

TEST_CASE("the trivial lift rejects genuine fibre maps") {
  auto c = FinCategory::finset(3);
  auto positive = embed_plain(nat_style_code(c));
  // reach into the delta branch and apply its lift to a non-identity
  auto branch = positive->sigma_branch(Sym::atom("s"));
  REQUIRE(branch->tag == IRPlusCode::Tag::Delta);
  auto fs = FinCategory::finset(3);
  CHECK_THROWS_AS(
      branch->delta.on_mor({2}, {3}, {fs->intern_function(2, 3, {0, 1})}),
      NonSplitInput);
}

TEST_CASE("plain code equality is extensional") {
  auto c = FinCategory::finset(2);
  Budget b;
  auto d1 = ir_delta(c, {Sym::atom("r")}, [c](const std::vector<int>& d) {
    return ir_iota(c, d[0]);
  });
  auto d2 = ir_delta(c, {Sym::atom("r")}, [c](const std::vector<int>& d) {
    return ir_iota(c, d[0]);
  });
  auto d3 = ir_delta(c, {Sym::atom("r")}, [c](const std::vector<int>&) {
    return ir_iota(c, 0);
  });
  CHECK(ir_code_equal(d1, d2, b));
  CHECK_FALSE(ir_code_equal(d1, d3, b));
}
