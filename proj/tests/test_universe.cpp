#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "irk/fixpoint.hpp"
#include "irk/universe.hpp"

using namespace irk;

TEST_CASE("sigma universe chain sizes over the opposite of finite sets") {
  auto op = FinCategory::finset(16)->opposite();
  Budget b;
  auto code = sigma_universe_code(op, 2);
  auto chain = initial_chain(code, 3, b);
  REQUIRE(chain.stages.size() == 4);
  CHECK(chain.stages[0].size() == 0);
  CHECK(chain.stages[1].size() == 1);
  CHECK(chain.stages[2].size() == 2);
  CHECK(chain.stages[3].size() == 21);
  CHECK(chain.all_split);
  CHECK_FALSE(chain.converged);
  // largest decoding at stage 3: a pair over a pair, every slot a pair
  int max_fibre = 0;
  for (int v : chain.stages[3].fibre) max_fibre = std::max(max_fibre, v);
  CHECK(max_fibre == 16);
}

TEST_CASE("sigma universe connections are inclusions on index values") {
  auto op = FinCategory::finset(16)->opposite();
  Budget b;
  auto chain = initial_chain(sigma_universe_code(op, 2), 3, b);
  for (const auto& w : chain.connect) {
    for (int i = 0; i < w.src.size(); ++i) {
      CHECK(w.dst.index[w.on_index[i]] == w.src.index[i]);
    }
  }
}

TEST_CASE("sigma universe continuation is functorial") {
  auto op = FinCategory::finset(16)->opposite();
  Budget b;
  b.max_objects = 3;
  b.max_pair_index = 2;
  CHECK(check_code_functorial(sigma_universe_code(op, 2), b));
}

TEST_CASE("sigma universe works over the core groupoid too") {
  auto core = FinCategory::finset(16)->core_groupoid();
  Budget b;
  auto chain = initial_chain(sigma_universe_code(core, 2), 3, b);
  CHECK(chain.stages[3].size() == 21);
  CHECK(check_code_functorial(sigma_universe_code(core, 2), b));
}

TEST_CASE("nf universe chain sizes") {
  auto core = FinCategory::finset(16)->core_groupoid();
  Budget b;
  b.max_enum = 300000;
  auto chain = initial_chain(nf_universe_code(core, 2), 3, b);
  REQUIRE(chain.stages.size() == 4);
  CHECK(chain.stages[1].size() == 2);
  CHECK(chain.stages[2].size() == 8);
  CHECK(chain.stages[3].size() == 5330);
  CHECK(chain.all_split);
}

TEST_CASE("pi universe exists over the core groupoid") {
  auto core = FinCategory::finset(16)->core_groupoid();
  Budget b;
  auto result = pi_universe_code(core, 2);
  REQUIRE(std::holds_alternative<CodePtr>(result));
  auto code = std::get<CodePtr>(result);
  CHECK(check_code_functorial(code, b));
  auto chain = initial_chain(code, 3, b);
  // same counting as the sigma universe; only the decodings differ
  CHECK(chain.stages[3].size() == 21);
  // decoding of the pair over the base with both slots the base: 2 * 2
  int max_fibre = 0;
  for (int v : chain.stages[2].fibre) max_fibre = std::max(max_fibre, v);
  CHECK(max_fibre == 4);
}

TEST_CASE("pi universe fails over finite sets with a witness") {
  auto fs = FinCategory::finset(4);
  auto result = pi_universe_code(fs, 2);
  REQUIRE(std::holds_alternative<ContravarianceFailure>(result));
  auto fail = std::get<ContravarianceFailure>(result);
  CHECK(fail.src_obj == 0);
  CHECK(fail.dst_obj == 1);
  CHECK(fs->mor_src(fail.witness) == 0);
  CHECK(fs->mor_dst(fail.witness) == 1);
  CHECK_FALSE(fs->find_inverse(fail.witness).has_value());
  // the probe's claim: nothing maps the target arity back to the source
  CHECK(fs->hom_count(1, 0) == 0);
}

TEST_CASE("pi universe fails over the opposite of finite sets") {
  auto op = FinCategory::finset(4)->opposite();
  auto result = pi_universe_code(op, 2);
  REQUIRE(std::holds_alternative<ContravarianceFailure>(result));
  auto fail = std::get<ContravarianceFailure>(result);
  CHECK(fail.src_obj == 1);
  CHECK(fail.dst_obj == 0);
  CHECK(op->mor_src(fail.witness) == 1);
  CHECK(op->mor_dst(fail.witness) == 0);
  // the required lift lives in an empty hom set of the underlying sets
  CHECK(op->base()->hom_count(1, 0) == 0);
}

TEST_CASE("universe codes reject unsupported bases") {
  auto disc = FinCategory::discrete(3);
  CHECK_THROWS_AS(sigma_universe_code(disc, 2), ShapeMismatch);
  CHECK_THROWS_AS(pi_universe_code(disc, 2), ShapeMismatch);
}
