#include "irk/ir.hpp"

#include <cmath>

namespace irk {

IRCodePtr ir_iota(CatPtr cat, int c) {
  auto code = std::make_shared<IRCode>();
  code->tag = IRCode::Tag::Iota;
  code->cat = std::move(cat);
  code->iota_c = c;
  return code;
}

IRCodePtr ir_sigma(CatPtr cat, std::vector<Sym> arity,
                   std::function<IRCodePtr(const Sym&)> branch) {
  auto code = std::make_shared<IRCode>();
  code->tag = IRCode::Tag::Sigma;
  code->cat = std::move(cat);
  code->arity = std::move(arity);
  code->sigma_branch = std::move(branch);
  return code;
}

IRCodePtr ir_delta(CatPtr cat, std::vector<Sym> arity,
                   std::function<IRCodePtr(const std::vector<int>&)> fn) {
  auto code = std::make_shared<IRCode>();
  code->tag = IRCode::Tag::Delta;
  code->cat = std::move(cat);
  code->arity = std::move(arity);
  code->delta_fn = std::move(fn);
  return code;
}

std::vector<std::vector<int>> enumerate_assignments(int n, const FamObject& x,
                                                    const Budget& budget) {
  const int xs = x.size();
  double count = std::pow(static_cast<double>(xs), n);
  if (count > static_cast<double>(budget.max_enum)) {
    throw BudgetExceeded("too many recursive-argument assignments: |X|^|A| = " +
                         std::to_string(xs) + "^" + std::to_string(n));
  }
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (xs == 0) return out;
  std::vector<int> g(n, 0);
  while (true) {
    out.push_back(g);
    int i = n - 1;
    while (i >= 0) {
      if (++g[i] < xs) break;
      g[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

// Tag for the summand of a delta indexed by the assignment g (positions
// into x.index, rendered as the index values themselves so that tags stay
// meaningful across families sharing index values).
Sym assignment_tag(const std::vector<int>& g, const FamObject& x) {
  std::vector<Sym> parts;
  parts.reserve(g.size());
  for (int p : g) parts.push_back(x.index[p]);
  return Sym::list(std::move(parts));
}

}  // namespace

FamObject interpret_ir_obj(const IRCodePtr& code, const FamObject& x,
                           const Budget& budget) {
  switch (code->tag) {
    case IRCode::Tag::Iota:
      return make_fam(code->cat, {{Sym::atom("*"), code->iota_c}});
    case IRCode::Tag::Sigma: {
      std::vector<FamObject> parts;
      std::vector<std::function<Sym(const Sym&)>> taggers;
      for (const Sym& a : code->arity) {
        parts.push_back(interpret_ir_obj(code->sigma_branch(a), x, budget));
        taggers.push_back([a](const Sym& s) { return Sym::list({a, s}); });
      }
      return fam_sum(code->cat, parts, taggers);
    }
    case IRCode::Tag::Delta: {
      const int n = static_cast<int>(code->arity.size());
      std::vector<FamObject> parts;
      std::vector<std::function<Sym(const Sym&)>> taggers;
      for (const auto& g : enumerate_assignments(n, x, budget)) {
        std::vector<int> decodings;
        decodings.reserve(g.size());
        for (int p : g) decodings.push_back(x.fibre[p]);
        parts.push_back(interpret_ir_obj(code->delta_fn(decodings), x, budget));
        const Sym tag = assignment_tag(g, x);
        taggers.push_back([tag](const Sym& s) { return Sym::list({tag, s}); });
      }
      return fam_sum(code->cat, parts, taggers);
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

FamMorphism interpret_ir_mor(const IRCodePtr& code, const FamMorphism& m,
                             const Budget& budget) {
  if (!is_split_cartesian(m)) {
    throw NonSplitInput(
        "morphism action of a plain code needs a split-cartesian input");
  }
  const FamObject fx = interpret_ir_obj(code, m.src, budget);
  const FamObject fy = interpret_ir_obj(code, m.dst, budget);

  // On a split input every fibre is carried along unchanged, so the whole
  // action is a renaming of index values: each canonical tag over X maps to
  // the same tag with assignment entries pushed through h.
  // Recursive renamer over the canonical tag structure of 'code'.
  std::function<Sym(const IRCodePtr&, const Sym&)> go =
      [&](const IRCodePtr& c, const Sym& s) -> Sym {
    switch (c->tag) {
      case IRCode::Tag::Iota:
        return s;
      case IRCode::Tag::Sigma: {
        const auto& items = s.items();
        const Sym& a = items.at(0);
        return Sym::list({a, go(c->sigma_branch(a), items.at(1))});
      }
      case IRCode::Tag::Delta: {
        const auto& items = s.items();
        const auto& gsyms = items.at(0).items();
        std::vector<Sym> moved;
        std::vector<int> decodings;
        moved.reserve(gsyms.size());
        for (const Sym& v : gsyms) {
          decodings.push_back(m.src.fibre[m.src.find_or_throw(v)]);
          moved.push_back(m.apply(v));
        }
        return Sym::list(
            {Sym::list(std::move(moved)), go(c->delta_fn(decodings), items.at(1))});
      }
    }
    throw ShapeMismatch("unreachable code tag");
  };
  return make_split_morphism(fx, fy,
                             [&](const Sym& s) { return go(code, s); });
}

}  // namespace irk
