#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "irk/container.hpp"

using namespace irk;

namespace {

std::vector<int> sorted_positions(const Container& c) {
  std::vector<int> p = c.positions;
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("extension counts follow the shape/position data") {
  Container c{{2, 0, 1}};
  CHECK(extension_count(c, 0) == 1);   // only the 0-position shape
  CHECK(extension_count(c, 1) == 3);
  CHECK(extension_count(c, 3) == 9 + 1 + 3);
  Budget b;
  std::vector<Sym> xs{Sym::atom("x"), Sym::atom("y")};
  auto elems = extension_elements(c, xs, b);
  CHECK(static_cast<long long>(elems.size()) == extension_count(c, 2));
  std::sort(elems.begin(), elems.end());
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
}

TEST_CASE("coproduct, product and composition match their extension laws") {
  Container a{{1, 2}};
  Container b{{0, 3}};
  for (long long x = 0; x <= 3; ++x) {
    CHECK(extension_count(cont_coproduct(a, b), x) ==
          extension_count(a, x) + extension_count(b, x));
    CHECK(extension_count(cont_product(a, b), x) ==
          extension_count(a, x) * extension_count(b, x));
    CHECK(extension_count(cont_compose(a, b), x) ==
          extension_count(a, extension_count(b, x)));
  }
  CHECK(cont_product(a, b).shapes() == 4);
  CHECK(cont_compose(a, b).shapes() == 2 + 4);
}

TEST_CASE("nest expressions evaluate to the composite container") {
  auto n = nest_plus(nest_times(nest_id(), nest_k(Container{{2}})),
                     nest_compose(nest_id(), nest_id()));
  Container c{{1, 3}};
  Container direct = cont_coproduct(
      cont_product(c, Container{{2}}), cont_compose(c, c));
  CHECK(container_equal(interpret_nest(n, c), direct));
  for (long long x = 0; x <= 2; ++x) {
    CHECK(direct_nest_count(n, c, x) == extension_count(direct, x));
  }
}

TEST_CASE("the lambda-term signature grows 1, 4, 26 shapes") {
  auto lam = lam_example();
  Container c0{{}};
  Container c1 = interpret_nest(lam, c0);
  Container c2 = interpret_nest(lam, c1);
  Container c3 = interpret_nest(lam, c2);
  CHECK(c1.shapes() == 1);
  CHECK(c2.shapes() == 4);
  CHECK(c3.shapes() == 26);
  CHECK(sorted_positions(c1) == std::vector<int>{1});
  CHECK(sorted_positions(c2) == std::vector<int>{0, 1, 1, 2});
  // closed terms with at most one free variable, at the second stage
  CHECK(extension_count(c2, 1) == 4);
  CHECK(extension_count(c2, 2) == 9);
  for (long long x = 0; x <= 2; ++x) {
    CHECK(direct_nest_count(lam, c2, x) == extension_count(c3, x));
  }
}

TEST_CASE("containers round-trip through families over op(finset)") {
  auto cat = FinCategory::finset(8)->opposite();
  Container c{{3, 0, 2, 2}};
  FamObject fam = container_to_family(c, cat);
  CHECK(fam.index.size() == 4);
  Container back = family_to_container(fam);
  CHECK(container_equal(back, c));
}
