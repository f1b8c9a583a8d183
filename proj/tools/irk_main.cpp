#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "irk/dsl.hpp"
#include "irk/fixpoint.hpp"
#include "irk/nest_compile.hpp"
#include "irk/oracle.hpp"
#include "irk/semantics.hpp"

using namespace irk;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const json& j, bool pretty) {
  if (pretty) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
}

// A code whose delta lift discards the fibre components, used to
// demonstrate that the law suites catch a broken functor.
CodePtr corrupted_code() {
  auto cat = FinCategory::finset(3);
  CodeFunctor f;
  f.cat = cat;
  f.arity = {Sym::atom("p")};
  f.on_obj = [cat](const ObjFamily& h) { return plus_iota(cat, h[0]); };
  f.on_mor = [cat](const ObjFamily& s, const ObjFamily& d, const MorFamily&) {
    // wrong: constant map instead of the given component
    std::vector<int> table(static_cast<std::size_t>(s[0]), 0);
    MorId m = d[0] > 0 ? cat->intern_function(s[0], d[0], table)
                       : cat->intern_function(0, 0, {});
    return mor_iota_iota(plus_iota(cat, s[0]), plus_iota(cat, d[0]), m);
  };
  return plus_delta(f);
}

SuiteReport suite_named(std::string name, SuiteReport s) {
  s.name = std::move(name) + ": " + s.name;
  return s;
}

// law suites for every definition in the file
Report run_check(const Definitions& defs, const Budget& budget,
                 bool mutate) {
  Report report;
  for (const auto& entry : defs.order) {
    const auto space = entry.find(' ');
    const std::string kind = entry.substr(0, space);
    const std::string name = entry.substr(space + 1);
    if (kind == "category") {
      const CatPtr& cat = defs.categories.at(name);
      SuiteReport s;
      s.name = name + ": category laws";
      s.cases = 1;
      std::string why;
      if (!cat->check_laws(&why, budget.max_objects + 1)) {
        s.failures.push_back({name, "category laws", why});
      }
      report.suites.push_back(std::move(s));
    } else if (kind == "code") {
      const CodeDef& def = defs.codes.at(name);
      if (def.pi_failure) {
        SuiteReport s;
        s.name = name + ": contravariant reindexing";
        s.cases = 1;
        const auto& cf = *def.pi_failure;
        s.failures.push_back(
            {"morphism " + std::to_string(cf.witness) + " : " +
                 std::to_string(cf.src_obj) + " -> " +
                 std::to_string(cf.dst_obj),
             "a lift of the dependent-product decoding", cf.reason});
        report.suites.push_back(std::move(s));
        continue;
      }
      report.suites.push_back(
          suite_named(name, check_endofunctor_laws(def.code, budget)));
      report.suites.push_back(
          suite_named(name, check_naturality(id_plus(def.code), budget)));
    } else if (kind == "nest") {
      const NestPtr& n = defs.nests.at(name);
      auto cat = FinCategory::finset(16)->opposite();
      SuiteReport s;
      s.name = name + ": compiled counts match the direct recursion";
      CodePtr code = compile_nest(n, cat, budget);
      Container stage{{}};
      for (int depth = 1; depth <= 2; ++depth) {
        Container next = interpret_nest(n, stage);
        Container compiled = family_to_container(
            interpret_obj(code, container_to_family(stage, cat), budget));
        for (long long x = 0; x <= 2; ++x) {
          ++s.cases;
          const long long direct = direct_nest_count(n, stage, x);
          const long long got = extension_count(compiled, x);
          if (direct != got) {
            s.failures.push_back({"depth " + std::to_string(depth) +
                                      ", |X| = " + std::to_string(x),
                                  std::to_string(direct),
                                  std::to_string(got)});
          }
        }
        stage = next;
      }
      report.suites.push_back(std::move(s));
    }
  }
  if (mutate) {
    report.suites.push_back(
        suite_named("mutated functor",
                    check_endofunctor_laws(corrupted_code(), budget)));
  }
  return report;
}

json chain_json(const std::string& name, const CodePtr& code, int stages,
                const Budget& budget) {
  FixpointResult r = initial_chain(code, stages, budget);
  json out;
  out["version"] = "1";
  out["code"] = name;
  json stage_list = json::array();
  for (const auto& st : r.stages) {
    json fibres = json::array();
    for (std::size_t i = 0; i < st.index.size(); ++i) {
      fibres.push_back({{"index", st.index[i].str()},
                        {"fibre", st.fibre[i]}});
    }
    stage_list.push_back(
        {{"cardinality", st.index.size()}, {"fibres", fibres}});
  }
  out["stages"] = stage_list;
  out["all_connecting_split"] = r.all_split;
  out["converged"] = r.converged;
  out["fixed_at"] = r.fixed_at;
  return out;
}

json nest_json(const std::string& name, const NestPtr& n, int depth,
               const std::vector<long long>& xs, const Budget& budget,
               bool* all_equal) {
  auto cat = FinCategory::finset(16)->opposite();
  const CodePtr code = compile_nest(n, cat, budget);
  FixpointResult chain = initial_chain(code, depth, budget);
  json rows = json::array();
  Container stage{{}};
  *all_equal = true;
  for (int d = 0; d <= depth; ++d) {
    const Container compiled = family_to_container(
        chain.stages[static_cast<std::size_t>(
            std::min<int>(d, static_cast<int>(chain.stages.size()) - 1))]);
    for (long long x : xs) {
      const long long chain_count = extension_count(compiled, x);
      const long long direct =
          d == 0 ? 0 : direct_nest_count(n, stage, x);
      const bool equal = chain_count == direct;
      *all_equal = *all_equal && equal;
      rows.push_back({{"depth", d},
                      {"x", x},
                      {"chain", chain_count},
                      {"direct", direct},
                      {"equal", equal}});
    }
    if (d >= 1 && d < depth) stage = interpret_nest(n, stage);
  }
  return json{{"version", "1"}, {"nest", name}, {"rows", rows}};
}

Report run_fold(const std::string& name, const CodeDef& def, int stages,
                const std::vector<int>& map, const Budget& budget) {
  Report report;
  if (!map.empty()) {
    // transport along a map of ground sets, out of the universe fold
    int b2 = 0;
    for (int v : map) b2 = std::max(b2, v + 1);
    FamMorphism fold = ground_map_fold(def.cat, static_cast<int>(map.size()),
                                       b2, map, stages, budget);
    SuiteReport s;
    s.name = name + ": ground-set transport";
    s.cases = static_cast<int>(fold.src.index.size());
    try {
      check_fam_morphism(fold);
    } catch (const EndpointMismatch& e) {
      s.failures.push_back({name, "a well-typed family morphism", e.what()});
    }
    report.suites.push_back(std::move(s));
    return report;
  }
  if (def.kind != "nf-universe") {
    throw ParseError(0, 0, "fold without --map needs an nf-universe code");
  }
  FixpointResult chain = initial_chain(def.code, stages, budget);
  const FamObject& top = chain.stages.back();
  SuiteReport normal;
  normal.name = name + ": normal forms are normal and stable";
  for (std::size_t i = 0; i < top.index.size(); ++i) {
    ++normal.cases;
    const auto r = nf_normalize(top.index[i], def.ground);
    if (!nf_predicate(r.nf, def.ground)) {
      normal.failures.push_back(
          {top.index[i].str(), "a normal form", r.nf.str()});
    } else if (nf_normalize(r.nf, def.ground).nf != r.nf) {
      normal.failures.push_back({r.nf.str(), "idempotent normalisation",
                                 nf_normalize(r.nf, def.ground).nf.str()});
    } else if (decode_card(r.nf, def.ground) !=
               decode_card(top.index[i], def.ground)) {
      normal.failures.push_back(
          {top.index[i].str(),
           std::to_string(decode_card(top.index[i], def.ground)),
           std::to_string(decode_card(r.nf, def.ground))});
    }
  }
  report.suites.push_back(std::move(normal));
  report.suites.push_back(check_nf_algebra_square(
      def.code, chain, static_cast<int>(chain.stages.size()) - 2,
      def.ground, budget));
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive inductive-recursive definitions at desk scale"};
  app.require_subcommand(1);

  std::string file;
  std::string target;
  int budget_index = -1;
  int budget_objects = -1;
  int stages = 3;
  int depth = 3;
  std::vector<long long> xs{1, 2};
  std::vector<int> map;
  bool mutate = false;
  bool pretty = false;
  bool json_out = true;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "definitions file")->required();
    cmd->add_option("--budget-index", budget_index,
                    "largest family index size enumerated");
    cmd->add_option("--budget-objects", budget_objects,
                    "number of fibre objects enumerated");
    cmd->add_flag("--pretty", pretty, "indent the JSON output");
    cmd->add_flag("--json,!--no-json", json_out, "emit JSON (default)");
  };

  CLI::App* check = app.add_subcommand("check", "run the law suites");
  add_common(check);
  check->add_flag("--mutate", mutate,
                  "also run the suites on a deliberately broken functor");

  CLI::App* chain = app.add_subcommand("chain", "compute an initial chain");
  add_common(chain);
  chain->add_option("--code", target, "name of the code definition");
  chain->add_option("--stages", stages, "number of chain stages");

  CLI::App* nest = app.add_subcommand(
      "nest", "compare a compiled nest against the direct recursion");
  add_common(nest);
  nest->add_option("--nest", target, "name of the nest definition");
  nest->add_option("--depth", depth, "recursion depth");
  nest->add_option("--xs", xs, "extension set sizes");

  CLI::App* fold = app.add_subcommand("fold", "run a fold out of a chain");
  add_common(fold);
  fold->add_option("--code", target, "name of the code definition");
  fold->add_option("--stages", stages, "number of chain stages");
  fold->add_option("--map", map,
                   "ground-set map as images of 0..b1-1 (sigma universes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Budget budget;
    if (budget_index >= 0) {
      budget.max_index = budget_index;
      budget.max_pair_index = std::min(budget.max_pair_index, budget_index);
    }
    if (budget_objects >= 0) budget.max_objects = budget_objects;
    Definitions defs = parse_source(read_file(file), budget);

    auto pick_code = [&](const char* cmd) -> std::pair<std::string, CodeDef> {
      if (target.empty() && defs.codes.size() == 1) {
        return *defs.codes.begin();
      }
      auto it = defs.codes.find(target);
      if (it == defs.codes.end()) {
        throw ParseError(0, 0, std::string(cmd) +
                                   ": no code named '" + target + "'");
      }
      return *it;
    };

    if (check->parsed()) {
      Report report = run_check(defs, budget, mutate);
      emit(report.to_json(), pretty);
      return report.ok() ? kExitPass : kExitCheckFailure;
    }
    if (chain->parsed()) {
      auto [name, def] = pick_code("chain");
      if (!def.code) {
        throw ParseError(0, 0, "code '" + name + "' did not build");
      }
      emit(chain_json(name, def.code, stages, budget), pretty);
      return kExitPass;
    }
    if (nest->parsed()) {
      std::string name = target;
      if (name.empty() && defs.nests.size() == 1) {
        name = defs.nests.begin()->first;
      }
      auto it = defs.nests.find(name);
      if (it == defs.nests.end()) {
        throw ParseError(0, 0, "nest: no nest named '" + name + "'");
      }
      bool all_equal = true;
      emit(nest_json(name, it->second, depth, xs, budget, &all_equal),
           pretty);
      return all_equal ? kExitPass : kExitCheckFailure;
    }
    // fold
    auto [name, def] = pick_code("fold");
    Report report = run_fold(name, def, stages, map, budget);
    emit(report.to_json(), pretty);
    return report.ok() ? kExitPass : kExitCheckFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
