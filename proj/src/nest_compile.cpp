#include "irk/nest_compile.hpp"

#include <algorithm>
#include <string>

namespace irk {

namespace {

Spine tail(const Spine& s) { return Spine(s.begin() + 1, s.end()); }

// The table dst-positions -> src-positions carried by a morphism
// src -> dst, in the two base categories where decodings reindex
// contravariantly: the opposite of finite sets (any function) and the
// core of finite sets (bijections, via the inverse).
std::vector<int> contra_table(const CatPtr& cat, MorId m) {
  if (cat->kind() == FinCategory::Kind::Opposite &&
      cat->base()->kind() == FinCategory::Kind::FinSet) {
    return cat->set_function(m);
  }
  if (cat->kind() == FinCategory::Kind::Core &&
      cat->base()->kind() == FinCategory::Kind::FinSet) {
    auto inv = cat->find_inverse(m);
    if (!inv) throw ShapeMismatch("core morphism has no inverse");
    return cat->set_function(*inv);
  }
  throw ShapeMismatch(
      "decodings do not reindex contravariantly over this category");
}

int require_product(const CatPtr& cat, const std::vector<int>& objs) {
  auto p = cat->product_object(objs);
  if (!p) {
    throw BudgetExceeded("product of decodings exceeds the base category");
  }
  return *p;
}

MorId require_product_mor(const CatPtr& cat, const std::vector<MorId>& ms) {
  auto p = cat->product_morphism(ms);
  if (!p) {
    throw BudgetExceeded("product of morphisms exceeds the base category");
  }
  return *p;
}

// Padding without the supersequence validation (the public pad_to checks).
CodePtr pad_impl(const CodePtr& code, const Spine& target);
CodeMorPtr pad_mor_impl(const CodeMorPtr& cm, const Spine& target);

CodePtr pad_impl(const CodePtr& code, const Spine& target) {
  if (target.empty()) {
    if (code->tag != IRPlusCode::Tag::Iota) {
      throw NotUniform("padding target ends before the code does");
    }
    return code;
  }
  const Spine rest = tail(target);
  const bool consume =
      (target[0] == SpineKind::Sigma &&
       code->tag == IRPlusCode::Tag::Sigma) ||
      (target[0] == SpineKind::Delta && code->tag == IRPlusCode::Tag::Delta);
  if (consume) {
    if (code->tag == IRPlusCode::Tag::Sigma) {
      auto br = code->sigma_branch;
      return plus_sigma(code->cat, code->sigma_arity, [br, rest](const Sym& a) {
        return pad_impl(br(a), rest);
      });
    }
    CodeFunctor f = code->delta;
    CodeFunctor g;
    g.cat = f.cat;
    g.arity = f.arity;
    g.on_obj = [f, rest](const ObjFamily& h) {
      return pad_impl(f.on_obj(h), rest);
    };
    g.on_mor = [f, rest](const ObjFamily& s, const ObjFamily& d,
                         const MorFamily& k) {
      return pad_mor_impl(f.on_mor(s, d, k), rest);
    };
    return plus_delta(g);
  }
  if (target[0] == SpineKind::Sigma) {
    return plus_sigma(code->cat, {Sym::num(0)},
                      [code, rest](const Sym&) { return pad_impl(code, rest); });
  }
  CodeFunctor g;
  g.cat = code->cat;
  g.arity = {};
  g.on_obj = [code, rest](const ObjFamily&) { return pad_impl(code, rest); };
  g.on_mor = [code, rest](const ObjFamily&, const ObjFamily&,
                          const MorFamily&) {
    return id_plus(pad_impl(code, rest));
  };
  return plus_delta(g);
}

CodeMorPtr pad_mor_impl(const CodeMorPtr& cm, const Spine& target) {
  if (target.empty()) {
    if (cm->tag != CodeMorphism::Tag::IotaIota) {
      throw NotUniform("padding target ends before the morphism does");
    }
    return cm;
  }
  const Spine rest = tail(target);
  const CodePtr ps = pad_impl(cm->src, target);
  const CodePtr pd = pad_impl(cm->dst, target);
  const bool consume =
      (target[0] == SpineKind::Sigma &&
       cm->src->tag == IRPlusCode::Tag::Sigma) ||
      (target[0] == SpineKind::Delta &&
       cm->src->tag == IRPlusCode::Tag::Delta);
  if (consume) {
    if (cm->tag == CodeMorphism::Tag::SigmaSigma) {
      auto rho = cm->sigma_rho;
      return mor_sigma_sigma(ps, pd, cm->sigma_alpha,
                             [rho, rest](const Sym& a) {
                               return pad_mor_impl(rho(a), rest);
                             });
    }
    auto rho = cm->delta_rho;
    return mor_delta_delta(ps, pd, cm->delta_alpha,
                           [rho, rest](const ObjFamily& h) {
                             return pad_mor_impl(rho(h), rest);
                           });
  }
  if (target[0] == SpineKind::Sigma) {
    return mor_sigma_sigma(
        ps, pd, [](const Sym& a) { return a; },
        [cm, rest](const Sym&) { return pad_mor_impl(cm, rest); });
  }
  return mor_delta_delta(
      ps, pd, [](const Sym& a) { return a; },
      [cm, rest](const ObjFamily&) { return pad_mor_impl(cm, rest); });
}

// Row-major tuples over the component arities, one Sym list per tuple.
std::vector<Sym> tuple_arity(const std::vector<std::vector<Sym>>& arities) {
  std::vector<Sym> out{Sym::list({})};
  for (const auto& ar : arities) {
    std::vector<Sym> next;
    for (const Sym& prefix : out) {
      for (const Sym& a : ar) {
        std::vector<Sym> items = prefix.items();
        items.push_back(a);
        next.push_back(Sym::list(std::move(items)));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Spine spine_of(const CodePtr& code, const Budget& budget) {
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return {};
    case IRPlusCode::Tag::Sigma: {
      Spine out{SpineKind::Sigma};
      if (code->sigma_arity.empty()) return out;
      Spine inner = spine_of(code->sigma_branch(code->sigma_arity[0]), budget);
      for (std::size_t i = 1; i < code->sigma_arity.size(); ++i) {
        if (spine_of(code->sigma_branch(code->sigma_arity[i]), budget) !=
            inner) {
          throw NotUniform("sigma branches have different spines");
        }
      }
      out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
    case IRPlusCode::Tag::Delta: {
      const int n = static_cast<int>(code->delta.arity.size());
      const int max_obj = std::max(1, budget.max_objects);
      const auto probes = enumerate_obj_families(n, max_obj, budget);
      Spine out{SpineKind::Delta};
      Spine inner = spine_of(code->delta.on_obj(probes[0]), budget);
      for (std::size_t i = 1; i < probes.size(); ++i) {
        if (spine_of(code->delta.on_obj(probes[i]), budget) != inner) {
          throw NotUniform("delta continuations have different spines");
        }
      }
      out.insert(out.end(), inner.begin(), inner.end());
      return out;
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

bool is_uniform(const CodePtr& code, const Budget& budget) {
  try {
    spine_of(code, budget);
    return true;
  } catch (const NotUniform&) {
    return false;
  }
}

CodePtr subst_iota(const CodePtr& code,
                   const std::function<CodePtr(int)>& leaf,
                   const std::function<CodeMorPtr(MorId)>& leaf_mor) {
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return leaf(code->iota_c);
    case IRPlusCode::Tag::Sigma: {
      auto br = code->sigma_branch;
      return plus_sigma(code->cat, code->sigma_arity,
                        [br, leaf, leaf_mor](const Sym& a) {
                          return subst_iota(br(a), leaf, leaf_mor);
                        });
    }
    case IRPlusCode::Tag::Delta: {
      CodeFunctor f = code->delta;
      CodeFunctor g;
      g.cat = f.cat;
      g.arity = f.arity;
      g.on_obj = [f, leaf, leaf_mor](const ObjFamily& h) {
        return subst_iota(f.on_obj(h), leaf, leaf_mor);
      };
      g.on_mor = [f, leaf, leaf_mor](const ObjFamily& s, const ObjFamily& d,
                                     const MorFamily& k) {
        const CodeMorPtr lifted = f.on_mor(s, d, k);
        return subst_iota_mor(lifted, subst_iota(f.on_obj(s), leaf, leaf_mor),
                              subst_iota(f.on_obj(d), leaf, leaf_mor),
                              leaf_mor);
      };
      return plus_delta(g);
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

CodeMorPtr subst_iota_mor(const CodeMorPtr& cm, const CodePtr& new_src,
                          const CodePtr& new_dst,
                          const std::function<CodeMorPtr(MorId)>& leaf_mor) {
  switch (cm->tag) {
    case CodeMorphism::Tag::IotaIota:
      return leaf_mor(cm->iota_f);
    case CodeMorphism::Tag::SigmaSigma: {
      auto alpha = cm->sigma_alpha;
      auto rho = cm->sigma_rho;
      auto sbr = new_src->sigma_branch;
      auto dbr = new_dst->sigma_branch;
      return mor_sigma_sigma(new_src, new_dst, alpha,
                             [alpha, rho, sbr, dbr, leaf_mor](const Sym& a) {
                               return subst_iota_mor(rho(a), sbr(a),
                                                     dbr(alpha(a)), leaf_mor);
                             });
    }
    case CodeMorphism::Tag::DeltaDelta: {
      auto alpha = cm->delta_alpha;
      auto rho = cm->delta_rho;
      const auto src_arity = cm->src->delta.arity;
      const auto dst_arity = cm->dst->delta.arity;
      auto sf = new_src->delta;
      auto df = new_dst->delta;
      return mor_delta_delta(
          new_src, new_dst, alpha,
          [alpha, rho, src_arity, dst_arity, sf, df,
           leaf_mor](const ObjFamily& h) {
            const ObjFamily ha =
                restrict_along(src_arity, h, dst_arity, alpha);
            return subst_iota_mor(rho(h), sf.on_obj(h), df.on_obj(ha),
                                  leaf_mor);
          });
    }
  }
  throw ShapeMismatch("unreachable morphism tag");
}

CodePtr times_code(const CodePtr& a, const CodePtr& b) {
  const CatPtr cat = a->cat;
  // leaf(c): b with every leaf c' replaced by the product c x c', and the
  // lifts of b's deltas paired with the identity on c.
  std::function<CodePtr(int)> leaf = [cat, b](int c) {
    std::function<CodePtr(int)> inner = [cat, c](int c2) {
      return plus_iota(cat, require_product(cat, {c, c2}));
    };
    std::function<CodeMorPtr(MorId)> inner_mor = [cat, c,
                                                  inner](MorId k2) {
      const MorId pm = require_product_mor(cat, {cat->identity(c), k2});
      return mor_iota_iota(inner(cat->mor_src(k2)), inner(cat->mor_dst(k2)),
                           pm);
    };
    return subst_iota(b, inner, inner_mor);
  };
  // leaf_mor(f : c -> d): the identity shape of b with every leaf payload
  // replaced by f paired with the identity on that leaf's decoding.
  std::function<CodeMorPtr(MorId)> leaf_mor = [cat, b, leaf](MorId f) {
    const int c = cat->mor_src(f);
    const int d = cat->mor_dst(f);
    std::function<CodeMorPtr(MorId)> payload = [cat, c, d, f](MorId k2) {
      const int c2 = cat->mor_src(k2);
      const MorId pm = require_product_mor(cat, {f, cat->identity(c2)});
      return mor_iota_iota(plus_iota(cat, require_product(cat, {c, c2})),
                           plus_iota(cat, require_product(cat, {d, c2})), pm);
    };
    return subst_iota_mor(id_plus(b), leaf(c), leaf(d), payload);
  };
  return subst_iota(a, leaf, leaf_mor);
}

CodePtr exp_family(const CatPtr& cat, const std::vector<CodePtr>& family,
                   const Spine& spine) {
  if (family.empty()) {
    return pad_impl(plus_iota(cat, require_product(cat, {})), spine);
  }
  const auto t = family[0]->tag;
  for (const auto& c : family) {
    if (c->tag != t) throw NotUniform("exponential of a non-uniform family");
  }
  switch (t) {
    case IRPlusCode::Tag::Iota: {
      std::vector<int> cs;
      for (const auto& c : family) cs.push_back(c->iota_c);
      return plus_iota(cat, require_product(cat, cs));
    }
    case IRPlusCode::Tag::Sigma: {
      std::vector<std::vector<Sym>> arities;
      for (const auto& c : family) arities.push_back(c->sigma_arity);
      const Spine rest = tail(spine);
      return plus_sigma(
          cat, tuple_arity(arities), [cat, family, rest](const Sym& tup) {
            std::vector<CodePtr> sub;
            for (std::size_t k = 0; k < family.size(); ++k) {
              sub.push_back(family[k]->sigma_branch(tup.items()[k]));
            }
            return exp_family(cat, sub, rest);
          });
    }
    case IRPlusCode::Tag::Delta: {
      // tagged union of the component arities, and matching offsets for
      // slicing a joint assignment back into per-component ones
      std::vector<Sym> arity;
      std::vector<std::size_t> off{0};
      for (std::size_t k = 0; k < family.size(); ++k) {
        for (const Sym& a : family[k]->delta.arity) {
          arity.push_back(Sym::list({Sym::num(static_cast<int>(k)), a}));
        }
        off.push_back(arity.size());
      }
      const Spine rest = tail(spine);
      auto slice = [off](const auto& joint, std::size_t k) {
        return typename std::decay_t<decltype(joint)>(
            joint.begin() + off[k], joint.begin() + off[k + 1]);
      };
      CodeFunctor g;
      g.cat = cat;
      g.arity = arity;
      g.on_obj = [cat, family, slice, rest](const ObjFamily& h) {
        std::vector<CodePtr> sub;
        for (std::size_t k = 0; k < family.size(); ++k) {
          sub.push_back(family[k]->delta.on_obj(slice(h, k)));
        }
        return exp_family(cat, sub, rest);
      };
      g.on_mor = [cat, family, slice, rest](const ObjFamily& s,
                                            const ObjFamily& d,
                                            const MorFamily& k) {
        std::vector<CodeMorPtr> sub;
        for (std::size_t j = 0; j < family.size(); ++j) {
          sub.push_back(family[j]->delta.on_mor(slice(s, j), slice(d, j),
                                                slice(k, j)));
        }
        return exp_family_mor(cat, sub, rest);
      };
      return plus_delta(g);
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

CodeMorPtr exp_family_mor(const CatPtr& cat,
                          const std::vector<CodeMorPtr>& ms,
                          const Spine& spine) {
  if (ms.empty()) return id_plus(exp_family(cat, {}, spine));
  std::vector<CodePtr> srcs, dsts;
  for (const auto& m : ms) {
    srcs.push_back(m->src);
    dsts.push_back(m->dst);
  }
  const CodePtr es = exp_family(cat, srcs, spine);
  const CodePtr ed = exp_family(cat, dsts, spine);
  const auto t = ms[0]->tag;
  for (const auto& m : ms) {
    if (m->tag != t) throw NotUniform("exponential of a non-uniform family");
  }
  switch (t) {
    case CodeMorphism::Tag::IotaIota: {
      std::vector<MorId> fs;
      for (const auto& m : ms) fs.push_back(m->iota_f);
      return mor_iota_iota(es, ed, require_product_mor(cat, fs));
    }
    case CodeMorphism::Tag::SigmaSigma: {
      const Spine rest = tail(spine);
      auto alpha = [ms](const Sym& tup) {
        std::vector<Sym> out;
        for (std::size_t k = 0; k < ms.size(); ++k) {
          out.push_back(ms[k]->sigma_alpha(tup.items()[k]));
        }
        return Sym::list(std::move(out));
      };
      auto rho = [cat, ms, rest](const Sym& tup) {
        std::vector<CodeMorPtr> sub;
        for (std::size_t k = 0; k < ms.size(); ++k) {
          sub.push_back(ms[k]->sigma_rho(tup.items()[k]));
        }
        return exp_family_mor(cat, sub, rest);
      };
      return mor_sigma_sigma(es, ed, alpha, rho);
    }
    case CodeMorphism::Tag::DeltaDelta: {
      const Spine rest = tail(spine);
      std::vector<std::size_t> off{0};
      for (const auto& m : ms) {
        off.push_back(off.back() + m->src->delta.arity.size());
      }
      // the joint alpha sends a tagged target element to the same tag with
      // the component alpha applied
      auto alpha = [ms](const Sym& tagged) {
        const auto k = static_cast<std::size_t>(
            tagged.items()[0].num_value());
        return Sym::list(
            {tagged.items()[0], ms[k]->delta_alpha(tagged.items()[1])});
      };
      auto rho = [cat, ms, off, rest](const ObjFamily& h) {
        std::vector<CodeMorPtr> sub;
        for (std::size_t k = 0; k < ms.size(); ++k) {
          const ObjFamily hk(h.begin() + off[k], h.begin() + off[k + 1]);
          sub.push_back(ms[k]->delta_rho(hk));
        }
        return exp_family_mor(cat, sub, rest);
      };
      return mor_delta_delta(es, ed, alpha, rho);
    }
  }
  throw ShapeMismatch("unreachable morphism tag");
}

CodeMorPtr exp_reindex(const CatPtr& cat, const std::vector<CodePtr>& family,
                       const std::vector<int>& u, const Spine& spine) {
  std::vector<CodePtr> fu;
  for (int j : u) fu.push_back(family.at(static_cast<std::size_t>(j)));
  const CodePtr es = exp_family(cat, family, spine);
  const CodePtr ed = exp_family(cat, fu, spine);
  if (family.empty()) return id_plus(es);
  switch (family[0]->tag) {
    case IRPlusCode::Tag::Iota: {
      // blockwise base table: slot j of the target picks block u[j] of the
      // source (base direction target -> source, decodings being sums)
      std::vector<int> cs;
      for (const auto& c : family) cs.push_back(c->iota_c);
      std::vector<int> offs{0};
      for (int c : cs) offs.push_back(offs.back() + c);
      std::vector<int> table;
      for (int j : u) {
        for (int v = 0; v < cs[static_cast<std::size_t>(j)]; ++v) {
          table.push_back(offs[static_cast<std::size_t>(j)] + v);
        }
      }
      const MorId m = cat->intern_function(static_cast<int>(table.size()),
                                           offs.back(), table);
      return mor_iota_iota(es, ed, m);
    }
    case IRPlusCode::Tag::Sigma: {
      const Spine rest = tail(spine);
      auto alpha = [u](const Sym& tup) {
        if (u.empty()) return Sym::num(0);  // the inserted singleton layer
        std::vector<Sym> out;
        for (int j : u) {
          out.push_back(tup.items()[static_cast<std::size_t>(j)]);
        }
        return Sym::list(std::move(out));
      };
      auto rho = [cat, family, u, rest](const Sym& tup) {
        std::vector<CodePtr> sub;
        for (std::size_t k = 0; k < family.size(); ++k) {
          sub.push_back(family[k]->sigma_branch(tup.items()[k]));
        }
        return exp_reindex(cat, sub, u, rest);
      };
      return mor_sigma_sigma(es, ed, alpha, rho);
    }
    case IRPlusCode::Tag::Delta: {
      const Spine rest = tail(spine);
      std::vector<std::size_t> off{0};
      for (const auto& c : family) {
        off.push_back(off.back() + c->delta.arity.size());
      }
      // target arity elements are tagged (j, b); they map back to the
      // source element (u[j], b)
      auto alpha = [u](const Sym& tagged) {
        const auto j =
            static_cast<std::size_t>(tagged.items()[0].num_value());
        return Sym::list(
            {Sym::num(u[j]), tagged.items()[1]});
      };
      auto rho = [cat, family, u, off, rest](const ObjFamily& h) {
        std::vector<CodePtr> sub;
        for (std::size_t k = 0; k < family.size(); ++k) {
          const ObjFamily hk(h.begin() + off[k], h.begin() + off[k + 1]);
          sub.push_back(family[k]->delta.on_obj(hk));
        }
        return exp_reindex(cat, sub, u, rest);
      };
      return mor_delta_delta(es, ed, alpha, rho);
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

CodePtr bullet(const CodePtr& a, const CodePtr& b) {
  const CatPtr cat = a->cat;
  // a leaf decoding is forgotten up to its size: c becomes the c-fold
  // exponential of b.  The spine of b resolves the zero-fold case.
  Budget probe;
  const Spine sb = spine_of(b, probe);
  std::function<CodePtr(int)> leaf = [cat, b, sb](int c) {
    return exp_family(cat, std::vector<CodePtr>(
                               static_cast<std::size_t>(cat->card(c)), b),
                      sb);
  };
  std::function<CodeMorPtr(MorId)> leaf_mor = [cat, b, sb](MorId f) {
    const std::vector<int> u = contra_table(cat, f);
    const std::vector<CodePtr> fam(
        static_cast<std::size_t>(cat->card(cat->mor_src(f))), b);
    return exp_reindex(cat, fam, u, sb);
  };
  return subst_iota(a, leaf, leaf_mor);
}

CodePtr pad_to(const CodePtr& code, const Spine& target,
               const Budget& budget) {
  const Spine own = spine_of(code, budget);
  std::size_t i = 0;
  for (SpineKind k : own) {
    while (i < target.size() && target[i] != k) ++i;
    if (i == target.size()) {
      throw NotUniform("padding target is not a supersequence of the spine");
    }
    ++i;
  }
  return pad_impl(code, target);
}

Spine spine_merge(const Spine& a, const Spine& b) {
  const std::size_t n = a.size(), m = b.size();
  // longest common subsequence table, then read off the supersequence
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      lcs[i][j] = (a[i - 1] == b[j - 1])
                      ? lcs[i - 1][j - 1] + 1
                      : std::max(lcs[i - 1][j], lcs[i][j - 1]);
    }
  }
  Spine out;
  std::size_t i = n, j = m;
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      out.push_back(a[--i]);
      --j;
    } else if (lcs[i - 1][j] >= lcs[i][j - 1]) {
      out.push_back(a[--i]);
    } else {
      out.push_back(b[--j]);
    }
  }
  while (i > 0) out.push_back(a[--i]);
  while (j > 0) out.push_back(b[--j]);
  std::reverse(out.begin(), out.end());
  return out;
}

CodePtr plus_uniform(const CodePtr& a, const CodePtr& b,
                     const Budget& budget) {
  const Spine t = spine_merge(spine_of(a, budget), spine_of(b, budget));
  const CodePtr pa = pad_to(a, t, budget);
  const CodePtr pb = pad_to(b, t, budget);
  return plus_sigma(a->cat, {Sym::num(0), Sym::num(1)},
                    [pa, pb](const Sym& s) {
                      return s.num_value() == 0 ? pa : pb;
                    });
}

CodePtr compile_nest(const NestPtr& n, const CatPtr& cat,
                     const Budget& budget) {
  switch (n->tag) {
    case NestExpr::Tag::Id: {
      CodeFunctor g;
      g.cat = cat;
      g.arity = {Sym::atom("p")};
      g.on_obj = [cat](const ObjFamily& h) { return plus_iota(cat, h[0]); };
      g.on_mor = [cat](const ObjFamily& s, const ObjFamily& d,
                       const MorFamily& k) {
        return mor_iota_iota(plus_iota(cat, s[0]), plus_iota(cat, d[0]),
                             k[0]);
      };
      return plus_delta(g);
    }
    case NestExpr::Tag::K: {
      const Container c = n->constant;
      std::vector<Sym> arity;
      for (int s = 0; s < c.shapes(); ++s) arity.push_back(Sym::num(s));
      return plus_sigma(cat, arity, [cat, c](const Sym& s) {
        const int p = c.positions[static_cast<std::size_t>(s.num_value())];
        auto obj = cat->object_of_card(p);
        if (!obj) {
          throw BudgetExceeded("position set exceeds the base category");
        }
        return plus_iota(cat, *obj);
      });
    }
    case NestExpr::Tag::Plus:
      return plus_uniform(compile_nest(n->lhs, cat, budget),
                          compile_nest(n->rhs, cat, budget), budget);
    case NestExpr::Tag::Times:
      return times_code(compile_nest(n->lhs, cat, budget),
                        compile_nest(n->rhs, cat, budget));
    case NestExpr::Tag::Compose:
      return bullet(compile_nest(n->lhs, cat, budget),
                    compile_nest(n->rhs, cat, budget));
  }
  throw ShapeMismatch("unreachable nest tag");
}

}  // namespace irk
