#include "irk/dsl.hpp"

#include <cctype>
#include <sstream>

#include "irk/nest_compile.hpp"

namespace irk {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
};

SExpr parse_expr(Lexer& lx) {
  lx.skip_space();
  if (lx.eof()) throw ParseError(lx.line, lx.col, "unexpected end of input");
  SExpr out;
  out.line = lx.line;
  out.col = lx.col;
  char c = lx.peek();
  if (c == ')') throw ParseError(lx.line, lx.col, "unexpected ')'");
  if (c == '(') {
    lx.advance();
    out.tag = SExpr::Tag::List;
    while (true) {
      lx.skip_space();
      if (lx.eof()) {
        throw ParseError(out.line, out.col, "unclosed '('");
      }
      if (lx.peek() == ')') {
        lx.advance();
        return out;
      }
      out.items.push_back(parse_expr(lx));
    }
  }
  std::string tok;
  while (!lx.eof() && !std::isspace(static_cast<unsigned char>(lx.peek())) &&
         lx.peek() != '(' && lx.peek() != ')' && lx.peek() != ';') {
    tok.push_back(lx.advance());
  }
  std::size_t digits = (tok[0] == '-') ? 1 : 0;
  bool numeric = tok.size() > digits;
  for (std::size_t i = digits; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) numeric = false;
  }
  if (numeric) {
    out.tag = SExpr::Tag::Num;
    out.num = std::stoll(tok);
  } else {
    out.tag = SExpr::Tag::Symbol;
    out.symbol = tok;
  }
  return out;
}

[[noreturn]] void fail(const SExpr& at, const std::string& what) {
  throw ParseError(at.line, at.col, what);
}

const SExpr& arg(const SExpr& form, std::size_t i, const char* what) {
  if (i >= form.items.size()) {
    fail(form, std::string("missing ") + what);
  }
  return form.items[i];
}

std::string want_symbol(const SExpr& e, const char* what) {
  if (e.tag != SExpr::Tag::Symbol) fail(e, std::string("expected ") + what);
  return e.symbol;
}

int want_num(const SExpr& e, const char* what) {
  if (e.tag != SExpr::Tag::Num) fail(e, std::string("expected ") + what);
  return static_cast<int>(e.num);
}

bool is_call(const SExpr& e, const char* head) {
  return e.tag == SExpr::Tag::List && !e.items.empty() &&
         e.items[0].tag == SExpr::Tag::Symbol && e.items[0].symbol == head;
}

CatPtr elab_cat(const SExpr& e, const Definitions& defs) {
  if (e.tag == SExpr::Tag::Symbol) {
    auto it = defs.categories.find(e.symbol);
    if (it == defs.categories.end()) {
      fail(e, "unknown category '" + e.symbol + "'");
    }
    return it->second;
  }
  if (is_call(e, "finset")) {
    return FinCategory::finset(want_num(arg(e, 1, "cardinality bound"),
                                        "cardinality bound"));
  }
  if (is_call(e, "discrete")) {
    return FinCategory::discrete(
        want_num(arg(e, 1, "object count"), "object count"));
  }
  if (is_call(e, "op")) return elab_cat(arg(e, 1, "category"), defs)->opposite();
  if (is_call(e, "core")) {
    return elab_cat(arg(e, 1, "category"), defs)->core_groupoid();
  }
  fail(e, "expected a category expression");
}

NestPtr elab_nest(const SExpr& e, const Definitions& defs) {
  if (e.tag == SExpr::Tag::Symbol) {
    if (e.symbol == "id") return nest_id();
    if (e.symbol == "lam") return lam_example();
    auto it = defs.nests.find(e.symbol);
    if (it == defs.nests.end()) fail(e, "unknown nest '" + e.symbol + "'");
    return it->second;
  }
  if (is_call(e, "k")) {
    Container c;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      c.positions.push_back(
          want_num(e.items[i], "position count per shape"));
    }
    return nest_k(std::move(c));
  }
  if (is_call(e, "plus") || is_call(e, "times") || is_call(e, "compose")) {
    if (e.items.size() != 3) fail(e, "expected two operands");
    NestPtr a = elab_nest(e.items[1], defs);
    NestPtr b = elab_nest(e.items[2], defs);
    if (e.items[0].symbol == "plus") return nest_plus(a, b);
    if (e.items[0].symbol == "times") return nest_times(a, b);
    return nest_compose(a, b);
  }
  fail(e, "expected a nest expression");
}

int elab_ground(const SExpr& e) {
  if (!is_call(e, "ground")) fail(e, "expected (ground N)");
  return want_num(arg(e, 1, "base cardinality"), "base cardinality");
}

CodeDef elab_code(const SExpr& e, const Definitions& defs,
                  const Budget& budget) {
  if (e.tag != SExpr::Tag::List || e.items.empty() ||
      e.items[0].tag != SExpr::Tag::Symbol) {
    fail(e, "expected a code expression");
  }
  const std::string& head = e.items[0].symbol;
  CodeDef def;
  def.kind = head;
  if (head == "sigma-universe" || head == "nf-universe" ||
      head == "pi-universe") {
    def.ground = elab_ground(arg(e, 1, "(ground N)"));
    const bool core_default = head != "sigma-universe";
    def.cat = (e.items.size() > 2)
                  ? elab_cat(e.items[2], defs)
                  : (core_default ? FinCategory::finset(16)->core_groupoid()
                                  : FinCategory::finset(16)->opposite());
    try {
      if (head == "sigma-universe") {
        def.code = sigma_universe_code(def.cat, def.ground);
      } else if (head == "nf-universe") {
        def.code = nf_universe_code(def.cat, def.ground);
      } else {
        auto result = pi_universe_code(def.cat, def.ground);
        if (auto* code = std::get_if<CodePtr>(&result)) {
          def.code = *code;
        } else {
          def.pi_failure = std::get<ContravarianceFailure>(result);
        }
      }
    } catch (const ShapeMismatch& ex) {
      fail(e, ex.what());
    }
    return def;
  }
  if (head == "iota") {
    const SExpr& ce = arg(e, 1, "decoding cardinality");
    int c = want_num(ce, "decoding cardinality");
    def.cat = elab_cat(arg(e, 2, "category"), defs);
    if (c < 0 || c >= def.cat->object_count()) {
      throw ParseError(ce.line, ce.col,
                       "decoding object " + std::to_string(c) +
                           " is out of range for a category with " +
                           std::to_string(def.cat->object_count()) +
                           " objects");
    }
    def.code = plus_iota(def.cat, c);
    return def;
  }
  if (head == "compile") {
    const SExpr& ne = arg(e, 1, "nest expression");
    def.nest_name =
        ne.tag == SExpr::Tag::Symbol ? ne.symbol : ne.str();
    NestPtr n = elab_nest(ne, defs);
    def.cat = (e.items.size() > 2) ? elab_cat(e.items[2], defs)
                                   : FinCategory::finset(16)->opposite();
    try {
      def.code = compile_nest(n, def.cat, budget);
    } catch (const NotUniform& ex) {
      fail(e, ex.what());
    }
    return def;
  }
  fail(e, "unknown code builder '" + head + "'");
}

}  // namespace

std::string SExpr::str() const {
  switch (tag) {
    case Tag::Num:
      return std::to_string(num);
    case Tag::Symbol:
      return symbol;
    case Tag::List: {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) os << ' ';
        os << items[i].str();
      }
      os << ')';
      return os.str();
    }
  }
  return "";
}

bool sexpr_equal(const SExpr& a, const SExpr& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case SExpr::Tag::Num:
      return a.num == b.num;
    case SExpr::Tag::Symbol:
      return a.symbol == b.symbol;
    case SExpr::Tag::List: {
      if (a.items.size() != b.items.size()) return false;
      for (std::size_t i = 0; i < a.items.size(); ++i) {
        if (!sexpr_equal(a.items[i], b.items[i])) return false;
      }
      return true;
    }
  }
  return false;
}

ParseError::ParseError(int l, int c, const std::string& what)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " +
                         what),
      line(l),
      col(c) {}

std::vector<SExpr> parse_sexprs(const std::string& text) {
  Lexer lx(text);
  std::vector<SExpr> out;
  while (true) {
    lx.skip_space();
    if (lx.eof()) return out;
    out.push_back(parse_expr(lx));
  }
}

Definitions parse_source(const std::string& text, const Budget& budget) {
  Definitions defs;
  for (const SExpr& form : parse_sexprs(text)) {
    if (form.tag != SExpr::Tag::List || form.items.empty() ||
        form.items[0].tag != SExpr::Tag::Symbol) {
      fail(form, "expected (category ...), (code ...) or (nest ...)");
    }
    const std::string& head = form.items[0].symbol;
    if (head == "category") {
      std::string name = want_symbol(arg(form, 1, "name"), "a name");
      defs.categories[name] = elab_cat(arg(form, 2, "category"), defs);
      defs.order.push_back("category " + name);
    } else if (head == "code") {
      const SExpr& second = arg(form, 1, "code expression");
      std::string name;
      CodeDef def;
      const bool is_builder =
          second.tag == SExpr::Tag::Symbol &&
          (second.symbol == "sigma-universe" ||
           second.symbol == "nf-universe" ||
           second.symbol == "pi-universe" || second.symbol == "iota" ||
           second.symbol == "compile");
      if (second.tag == SExpr::Tag::Symbol && !is_builder &&
          form.items.size() == 3 &&
          form.items[2].tag == SExpr::Tag::List) {
        // (code NAME CODE)
        name = second.symbol;
        def = elab_code(form.items[2], defs, budget);
      } else {
        // (code BUILDER ARGS...): the builder call, named by the builder
        SExpr call = form;
        call.items.erase(call.items.begin());
        name = want_symbol(call.items[0], "a code builder");
        def = elab_code(call, defs, budget);
      }
      defs.codes[name] = std::move(def);
      defs.order.push_back("code " + name);
    } else if (head == "nest") {
      const SExpr& second = arg(form, 1, "nest expression");
      std::string name;
      NestPtr n;
      if (form.items.size() >= 3) {
        name = want_symbol(second, "a name");
        n = elab_nest(form.items[2], defs);
      } else {
        name = second.tag == SExpr::Tag::Symbol ? second.symbol : "nest";
        n = elab_nest(second, defs);
      }
      defs.nests[name] = n;
      defs.order.push_back("nest " + name);
    } else {
      fail(form, "unknown definition form '" + head + "'");
    }
    defs.sources.push_back(form);
  }
  return defs;
}

std::string print_definitions(const Definitions& defs) {
  std::ostringstream os;
  for (const SExpr& s : defs.sources) os << s.str() << '\n';
  return os.str();
}

}  // namespace irk
