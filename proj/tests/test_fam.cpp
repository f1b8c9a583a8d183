#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irk/fam.hpp"

using namespace irk;

TEST_CASE("family construction sorts and rejects duplicates") {
  auto c = FinCategory::finset(3);
  auto x = make_fam(c, {{Sym::num(2), 1}, {Sym::num(0), 2}, {Sym::num(1), 3}});
  CHECK(x.size() == 3);
  CHECK(x.index[0] == Sym::num(0));
  CHECK(x.fibre[0] == 2);
  CHECK(x.find(Sym::num(2)) == 2);
  CHECK_FALSE(x.find(Sym::num(5)).has_value());
  CHECK_THROWS_AS(make_fam(c, {{Sym::num(0), 1}, {Sym::num(0), 2}}),
                  ShapeMismatch);
}

TEST_CASE("identity and composition") {
  auto c = FinCategory::finset(3);
  auto x = make_fam(c, {{Sym::atom("a"), 2}, {Sym::atom("b"), 3}});
  auto y = make_fam(c, {{Sym::atom("u"), 2}});
  auto f = make_fam_morphism(
      x, y, [](const Sym&) { return Sym::atom("u"); },
      [&](const Sym& s) {
        if (s == Sym::atom("a")) return c->identity(2);
        return c->intern_function(3, 2, {0, 1, 1});
      });
  check_fam_morphism(f);
  CHECK_FALSE(is_split_cartesian(f));
  CHECK(is_split_cartesian(fam_identity(x)));
  CHECK(fam_mor_equal(fam_compose(f, fam_identity(x)), f));
  CHECK(fam_mor_equal(fam_compose(fam_identity(y), f), f));
  CHECK(f.apply(Sym::atom("b")) == Sym::atom("u"));
}

TEST_CASE("morphism validation catches bad fibre endpoints") {
  auto c = FinCategory::finset(3);
  auto x = make_fam(c, {{Sym::atom("a"), 2}});
  auto y = make_fam(c, {{Sym::atom("u"), 3}});
  FamMorphism bad{x, y, {0}, {c->identity(2)}};
  CHECK_THROWS_AS(check_fam_morphism(bad), EndpointMismatch);
}

TEST_CASE("coproduct with split injections") {
  auto c = FinCategory::finset(3);
  auto x = make_fam(c, {{Sym::num(0), 1}, {Sym::num(1), 2}});
  auto y = make_fam(c, {{Sym::num(0), 3}});
  auto tag = [](int t) {
    return [t](const Sym& s) { return Sym::list({Sym::num(t), s}); };
  };
  auto cp = fam_coproduct(c, {x, y}, {tag(0), tag(1)});
  CHECK(cp.sum.size() == 3);
  REQUIRE(cp.injections.size() == 2);
  for (const auto& inj : cp.injections) CHECK(is_split_cartesian(inj));
  CHECK(cp.injections[1].apply(Sym::num(0)) ==
        Sym::list({Sym::num(1), Sym::num(0)}));
  auto pos = cp.sum.find(Sym::list({Sym::num(1), Sym::num(0)}));
  REQUIRE(pos.has_value());
  CHECK(cp.sum.fibre[*pos] == 3);
}

TEST_CASE("iso checking") {
  auto c = FinCategory::finset(2);
  auto x = make_fam(c, {{Sym::atom("a"), 1}, {Sym::atom("b"), 2}});
  auto y = make_fam(c, {{Sym::atom("p"), 1}, {Sym::atom("q"), 2}});
  auto h = [](const Sym& s) {
    return s == Sym::atom("a") ? Sym::atom("p") : Sym::atom("q");
  };
  auto hinv = [](const Sym& s) {
    return s == Sym::atom("p") ? Sym::atom("a") : Sym::atom("b");
  };
  FamIso iso{make_split_morphism(x, y, h), make_split_morphism(y, x, hinv)};
  CHECK(check_fam_iso(iso));
  // swapped fibres make the split backward map ill-typed
  auto z = make_fam(c, {{Sym::atom("a"), 2}, {Sym::atom("b"), 1}});
  CHECK_THROWS_AS(make_split_morphism(y, z, hinv), EndpointMismatch);
  // a non-inverse pair that is well-typed must still be rejected
  auto swap = [](const Sym& s) {
    return s == Sym::atom("p") ? Sym::atom("b") : Sym::atom("a");
  };
  auto k = [&](const Sym& s) {
    return s == Sym::atom("p") ? c->intern_function(1, 2, {0})
                               : c->intern_function(2, 1, {0, 0});
  };
  FamIso bad{make_split_morphism(x, y, h),
             make_fam_morphism(y, x, swap, k)};
  std::string why;
  CHECK_FALSE(check_fam_iso(bad, &why));
}
