#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irk/container.hpp"
#include "irk/irplus.hpp"
#include "irk/universe.hpp"

namespace irk {

// A parsed s-expression with its source position: an integer, a symbol,
// or a list.
struct SExpr {
  enum class Tag { Num, Symbol, List };
  Tag tag = Tag::List;
  long long num = 0;
  std::string symbol;
  std::vector<SExpr> items;
  int line = 1;
  int col = 1;

  std::string str() const;
};

bool sexpr_equal(const SExpr& a, const SExpr& b);

// A syntax or elaboration error carrying the source position.
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

std::vector<SExpr> parse_sexprs(const std::string& text);

// The definition forms:
//   (category NAME CAT)        CAT ::= (finset N) | (discrete N)
//                                    | (op CAT) | (core CAT) | NAME
//   (code NAME CODE) or (code BUILDER ARGS...)
//       CODE ::= (sigma-universe (ground N) [CAT])
//              | (nf-universe (ground N) [CAT])
//              | (pi-universe (ground N) [CAT])
//              | (iota N CAT)
//              | (compile NEST [CAT])
//   (nest NAME NEST) or (nest NEST)
//       NEST ::= id | lam | NAME | (k P0 P1 ...)
//              | (plus NEST NEST) | (times NEST NEST) | (compose NEST NEST)
struct CodeDef {
  std::string kind;  // sigma-universe | nf-universe | pi-universe | iota
                     // | compile
  CodePtr code;      // null when a pi universe fails
  CatPtr cat;
  int ground = 0;
  std::string nest_name;  // for compile
  std::optional<ContravarianceFailure> pi_failure;
};

struct Definitions {
  std::vector<std::string> order;  // names in file order, prefixed by kind
  std::map<std::string, CatPtr> categories;
  std::map<std::string, CodeDef> codes;
  std::map<std::string, NestPtr> nests;
  std::vector<SExpr> sources;  // the definition forms as read
};

Definitions parse_source(const std::string& text, const Budget& budget);

// Prints the definitions back to source; parsing the result yields
// structurally equal s-expressions.
std::string print_definitions(const Definitions& defs);

}  // namespace irk
