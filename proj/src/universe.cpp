#include "irk/universe.hpp"

#include <numeric>

namespace irk {

namespace {

enum class Combine { Sum, Product };

int combine_card(Combine mode, const ObjFamily& e) {
  int out = mode == Combine::Sum ? 0 : 1;
  for (int c : e) {
    if (mode == Combine::Sum) {
      out += c;
    } else {
      out *= c;
    }
  }
  return out;
}

std::vector<int> offsets(const ObjFamily& e) {
  std::vector<int> off(e.size() + 1, 0);
  for (std::size_t i = 0; i < e.size(); ++i) off[i + 1] = off[i] + e[i];
  return off;
}

// row-major encoding of a tuple u with component ranges e
int encode(const ObjFamily& e, const std::vector<int>& u) {
  int out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) out = out * e[i] + u[i];
  return out;
}

bool is_op_of_finset(const CatPtr& cat) {
  return cat->kind() == FinCategory::Kind::Opposite &&
         cat->base()->kind() == FinCategory::Kind::FinSet;
}

bool is_core_of_finset(const CatPtr& cat) {
  return cat->kind() == FinCategory::Kind::Core &&
         cat->base()->kind() == FinCategory::Kind::FinSet;
}

// Lifts componentwise morphisms ks : e_i -> e2_i to a single morphism
// combine(e) -> combine(e2) in cat.
MorId lift_components(const CatPtr& cat, Combine mode, const ObjFamily& e,
                      const ObjFamily& e2, const MorFamily& ks) {
  const int ce = combine_card(mode, e);
  const int ce2 = combine_card(mode, e2);
  if (is_op_of_finset(cat)) {
    if (mode != Combine::Sum) {
      throw ShapeMismatch("no product lift over the opposite of finite sets");
    }
    // underlying direction: sum(e2) -> sum(e), blockwise
    const auto off = offsets(e);
    const auto off2 = offsets(e2);
    std::vector<int> t(ce2);
    for (std::size_t i = 0; i < e2.size(); ++i) {
      const auto fi = cat->set_function(ks[i]);  // e2_i -> e_i in Set
      for (int v = 0; v < e2[i]; ++v) t[off2[i] + v] = off[i] + fi[v];
    }
    return cat->intern_function(ce2, ce, t);
  }
  // core of finite sets: each component is a bijection e_i -> e2_i
  if (mode == Combine::Sum) {
    const auto off = offsets(e);
    const auto off2 = offsets(e2);
    std::vector<int> t(ce);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto bi = cat->set_function(ks[i]);
      for (int v = 0; v < e[i]; ++v) t[off[i] + v] = off2[i] + bi[v];
    }
    return cat->intern_function(ce, ce2, t);
  }
  std::vector<int> t(ce);
  std::vector<std::vector<int>> tabs;
  for (MorId k : ks) tabs.push_back(cat->set_function(k));
  std::vector<int> u(e.size(), 0);
  for (int idx = 0; idx < ce; ++idx) {
    int rem = idx;
    for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
      u[i] = rem % e[i];
      rem /= e[i];
    }
    std::vector<int> v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = tabs[i][u[i]];
    t[idx] = encode(e2, v);
  }
  return cat->intern_function(ce, ce2, t);
}

// Reindexing combine(e) -> combine(e . t) in cat, where t maps target
// positions to source positions.  For the opposite of finite sets this is
// the block inclusion read backwards; for the core it permutes blocks or
// tuple slots along the bijection g whose inverse tabulates t.
MorId reindex(const CatPtr& cat, Combine mode, const ObjFamily& e,
              const std::vector<int>& t, const std::vector<int>& g) {
  ObjFamily et;
  for (int j : t) et.push_back(e[j]);
  const int ce = combine_card(mode, e);
  const int cet = combine_card(mode, et);
  if (is_op_of_finset(cat)) {
    if (mode != Combine::Sum) {
      throw ShapeMismatch("no product reindexing over the opposite of finite sets");
    }
    const auto off = offsets(e);
    const auto offt = offsets(et);
    std::vector<int> tab(cet);
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (int v = 0; v < et[j]; ++v) tab[offt[j] + v] = off[t[j]] + v;
    }
    return cat->intern_function(cet, ce, tab);
  }
  if (mode == Combine::Sum) {
    const auto off = offsets(e);
    const auto offt = offsets(et);
    std::vector<int> tab(ce);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int v = 0; v < e[i]; ++v) tab[off[i] + v] = offt[g[i]] + v;
    }
    return cat->intern_function(ce, cet, tab);
  }
  std::vector<int> tab(ce);
  std::vector<int> u(e.size(), 0);
  for (int idx = 0; idx < ce; ++idx) {
    int rem = idx;
    for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
      u[i] = rem % e[i];
      rem /= e[i];
    }
    std::vector<int> v(t.size());
    for (std::size_t j = 0; j < t.size(); ++j) v[j] = u[t[j]];
    tab[idx] = encode(et, v);
  }
  return cat->intern_function(ce, cet, tab);
}

std::vector<Sym> fin_arity(int d) {
  std::vector<Sym> out;
  for (int i = 0; i < d; ++i) out.push_back(Sym::num(i));
  return out;
}

// The continuation of the universe's pair-former: the first recursive
// argument's decoding d determines the arity of a second delta whose
// decodings combine into the node's own decoding.
CodeFunctor pair_former(const CatPtr& cat, Combine mode) {
  CodeFunctor f;
  f.cat = cat;
  f.arity = {Sym::atom("a")};

  auto inner = [cat, mode](int d) {
    CodeFunctor g;
    g.cat = cat;
    g.arity = fin_arity(d);
    g.on_obj = [cat, mode](const ObjFamily& e) {
      return plus_iota(cat, combine_card(mode, e));
    };
    g.on_mor = [cat, mode](const ObjFamily& e, const ObjFamily& e2,
                           const MorFamily& ks) {
      return mor_iota_iota(plus_iota(cat, combine_card(mode, e)),
                           plus_iota(cat, combine_card(mode, e2)),
                           lift_components(cat, mode, e, e2, ks));
    };
    return plus_delta(std::move(g));
  };

  f.on_obj = [inner](const ObjFamily& h) { return inner(h[0]); };
  f.on_mor = [cat, mode, inner](const ObjFamily& s, const ObjFamily& d,
                                const MorFamily& ks) {
    const MorId m = ks[0];
    // t : positions of the target arity -> positions of the source arity
    std::vector<int> t, g;
    if (is_op_of_finset(cat)) {
      t = cat->set_function(m);  // underlying Set direction d2 -> d1
    } else {
      g = cat->set_function(m);  // a bijection d1 -> d2
      t.assign(d[0], -1);
      for (int i = 0; i < s[0]; ++i) t[g[i]] = i;
    }
    const CodePtr src = inner(s[0]);
    const CodePtr dst = inner(d[0]);
    return mor_delta_delta(
        src, dst, [t](const Sym& j) { return Sym::num(t[j.num_value()]); },
        [cat, mode, src, dst, t, g](const ObjFamily& e) {
          ObjFamily et;
          for (int j : t) et.push_back(e[j]);
          return mor_iota_iota(plus_iota(cat, combine_card(mode, e)),
                               plus_iota(cat, combine_card(mode, et)),
                               reindex(cat, mode, e, t, g));
        });
  };
  return f;
}

void require_universe_base(const CatPtr& cat) {
  if (!is_op_of_finset(cat) && !is_core_of_finset(cat)) {
    throw ShapeMismatch(
        "universe codes need the opposite or the core groupoid of finite sets");
  }
}

}  // namespace

CodePtr sigma_universe_code(const CatPtr& cat, int base_card) {
  require_universe_base(cat);
  return plus_sigma(
      cat, {Sym::atom("base"), Sym::atom("sig")},
      [cat, base_card](const Sym& a) {
        if (a == Sym::atom("base")) return plus_iota(cat, base_card);
        return plus_delta(pair_former(cat, Combine::Sum));
      });
}

CodePtr nf_universe_code(const CatPtr& cat, int base_card) {
  require_universe_base(cat);
  return plus_sigma(
      cat, {Sym::atom("one"), Sym::atom("b"), Sym::atom("sig")},
      [cat, base_card](const Sym& a) {
        if (a == Sym::atom("one")) return plus_iota(cat, 1);
        if (a == Sym::atom("b")) return plus_iota(cat, base_card);
        return plus_delta(pair_former(cat, Combine::Sum));
      });
}

PiUniverseResult pi_universe_code(const CatPtr& cat, int base_card) {
  if (is_core_of_finset(cat)) {
    return plus_sigma(
        cat, {Sym::atom("base"), Sym::atom("pi")},
        [cat, base_card](const Sym& a) {
          if (a == Sym::atom("base")) return plus_iota(cat, base_card);
          return plus_delta(pair_former(cat, Combine::Product));
        });
  }
  if (cat->kind() == FinCategory::Kind::FinSet) {
    // a pi node's argument positions must reindex against the direction of
    // the morphism; the unique map out of the empty set has nothing to
    // reindex along
    const MorId w = cat->intern_function(0, 1, {});
    if (cat->hom_count(1, 0) != 0) {
      throw ShapeMismatch("probe invariant violated");
    }
    return ContravarianceFailure{
        "no map from the target arity Fin 1 back into the source arity "
        "Fin 0 along which argument positions could reindex",
        0, 1, w};
  }
  if (is_op_of_finset(cat)) {
    // over the opposite the arity reindexes fine, but the decoding does
    // not: at the morphism Fin 1 -> Fin 0 with component decoding Fin 0,
    // the lift would be a map from the one-element product into the empty
    // product, and hom(Fin 1, Fin 0) is empty in the underlying sets
    const MorId w = cat->intern_function(0, 1, {});  // Fin 1 -> Fin 0 here
    if (cat->base()->hom_count(1, 0) != 0) {
      throw ShapeMismatch("probe invariant violated");
    }
    return ContravarianceFailure{
        "the lift at the morphism Fin 1 -> Fin 0 with component decoding "
        "Fin 0 would map the empty dependent product (one element) to an "
        "empty set of tuples, and no such function exists",
        1, 0, w};
  }
  throw ShapeMismatch(
      "pi universe probe supports finite sets, their opposite, and their core");
}

}  // namespace irk
