#include "irk/irplus.hpp"

#include <algorithm>

namespace irk {

CodePtr plus_iota(CatPtr cat, int c) {
  auto code = std::make_shared<IRPlusCode>();
  code->tag = IRPlusCode::Tag::Iota;
  code->cat = std::move(cat);
  code->iota_c = c;
  return code;
}

CodePtr plus_sigma(CatPtr cat, std::vector<Sym> arity,
                   std::function<CodePtr(const Sym&)> branch) {
  auto code = std::make_shared<IRPlusCode>();
  code->tag = IRPlusCode::Tag::Sigma;
  code->cat = std::move(cat);
  code->sigma_arity = std::move(arity);
  code->sigma_branch = std::move(branch);
  return code;
}

CodePtr plus_delta(CodeFunctor f) {
  auto code = std::make_shared<IRPlusCode>();
  code->tag = IRPlusCode::Tag::Delta;
  code->cat = f.cat;
  code->delta = std::move(f);
  return code;
}

CodeMorPtr mor_iota_iota(CodePtr src, CodePtr dst, MorId f) {
  if (src->tag != IRPlusCode::Tag::Iota || dst->tag != IRPlusCode::Tag::Iota) {
    throw ShapeMismatch("iota-to-iota morphism needs iota endpoints");
  }
  if (src->cat->mor_src(f) != src->iota_c ||
      src->cat->mor_dst(f) != dst->iota_c) {
    throw EndpointMismatch("iota-to-iota payload endpoints");
  }
  auto m = std::make_shared<CodeMorphism>();
  m->tag = CodeMorphism::Tag::IotaIota;
  m->src = std::move(src);
  m->dst = std::move(dst);
  m->iota_f = f;
  return m;
}

CodeMorPtr mor_sigma_sigma(CodePtr src, CodePtr dst,
                           std::function<Sym(const Sym&)> alpha,
                           std::function<CodeMorPtr(const Sym&)> rho) {
  if (src->tag != IRPlusCode::Tag::Sigma ||
      dst->tag != IRPlusCode::Tag::Sigma) {
    throw ShapeMismatch("sigma-to-sigma morphism needs sigma endpoints");
  }
  auto m = std::make_shared<CodeMorphism>();
  m->tag = CodeMorphism::Tag::SigmaSigma;
  m->src = std::move(src);
  m->dst = std::move(dst);
  m->sigma_alpha = std::move(alpha);
  m->sigma_rho = std::move(rho);
  return m;
}

CodeMorPtr mor_delta_delta(CodePtr src, CodePtr dst,
                           std::function<Sym(const Sym&)> alpha,
                           std::function<CodeMorPtr(const ObjFamily&)> rho) {
  if (src->tag != IRPlusCode::Tag::Delta ||
      dst->tag != IRPlusCode::Tag::Delta) {
    throw ShapeMismatch("delta-to-delta morphism needs delta endpoints");
  }
  auto m = std::make_shared<CodeMorphism>();
  m->tag = CodeMorphism::Tag::DeltaDelta;
  m->src = std::move(src);
  m->dst = std::move(dst);
  m->delta_alpha = std::move(alpha);
  m->delta_rho = std::move(rho);
  return m;
}

int arity_position(const std::vector<Sym>& arity, const Sym& a) {
  for (std::size_t i = 0; i < arity.size(); ++i) {
    if (arity[i] == a) return static_cast<int>(i);
  }
  throw ShapeMismatch("arity element not found: " + a.str());
}

ObjFamily restrict_along(const std::vector<Sym>& from_arity,
                         const ObjFamily& h,
                         const std::vector<Sym>& to_arity,
                         const std::function<Sym(const Sym&)>& alpha) {
  ObjFamily out;
  out.reserve(to_arity.size());
  for (const Sym& b : to_arity) {
    out.push_back(h.at(arity_position(from_arity, alpha(b))));
  }
  return out;
}

MorFamily restrict_mors_along(const std::vector<Sym>& from_arity,
                              const MorFamily& h,
                              const std::vector<Sym>& to_arity,
                              const std::function<Sym(const Sym&)>& alpha) {
  MorFamily out;
  out.reserve(to_arity.size());
  for (const Sym& b : to_arity) {
    out.push_back(h.at(arity_position(from_arity, alpha(b))));
  }
  return out;
}

std::vector<ObjFamily> enumerate_obj_families(int arity_size, int max_obj,
                                              const Budget& budget) {
  double count = 1;
  for (int i = 0; i < arity_size; ++i) count *= max_obj;
  if (count > static_cast<double>(budget.max_enum)) {
    throw BudgetExceeded("too many decoding assignments to enumerate");
  }
  std::vector<ObjFamily> out;
  if (arity_size == 0) {
    out.push_back({});
    return out;
  }
  if (max_obj == 0) return out;
  ObjFamily h(arity_size, 0);
  while (true) {
    out.push_back(h);
    int i = arity_size - 1;
    while (i >= 0) {
      if (++h[i] < max_obj) break;
      h[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

CodeMorPtr id_plus(const CodePtr& code) {
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return mor_iota_iota(code, code, code->cat->identity(code->iota_c));
    case IRPlusCode::Tag::Sigma:
      return mor_sigma_sigma(
          code, code, [](const Sym& a) { return a; },
          [code](const Sym& a) { return id_plus(code->sigma_branch(a)); });
    case IRPlusCode::Tag::Delta:
      return mor_delta_delta(
          code, code, [](const Sym& b) { return b; },
          [code](const ObjFamily& h) {
            return id_plus(code->delta.on_obj(h));
          });
  }
  throw ShapeMismatch("unreachable code tag");
}

CodeMorPtr structural_identity(const CodePtr& src, const CodePtr& dst) {
  if (src->tag != dst->tag) {
    throw ShapeMismatch("structural identity between differently shaped codes");
  }
  switch (src->tag) {
    case IRPlusCode::Tag::Iota:
      if (src->iota_c != dst->iota_c) {
        throw ShapeMismatch("structural identity between different decodings");
      }
      return mor_iota_iota(src, dst, src->cat->identity(src->iota_c));
    case IRPlusCode::Tag::Sigma:
      if (src->sigma_arity != dst->sigma_arity) {
        throw ShapeMismatch("structural identity between different arities");
      }
      return mor_sigma_sigma(
          src, dst, [](const Sym& a) { return a; },
          [src, dst](const Sym& a) {
            return structural_identity(src->sigma_branch(a),
                                       dst->sigma_branch(a));
          });
    case IRPlusCode::Tag::Delta:
      if (src->delta.arity != dst->delta.arity) {
        throw ShapeMismatch("structural identity between different arities");
      }
      return mor_delta_delta(
          src, dst, [](const Sym& b) { return b; },
          [src, dst](const ObjFamily& h) {
            return structural_identity(src->delta.on_obj(h),
                                       dst->delta.on_obj(h));
          });
  }
  throw ShapeMismatch("unreachable code tag");
}

CodeMorPtr compose_plus(const CodeMorPtr& g, const CodeMorPtr& f) {
  if (f->tag != g->tag) {
    throw ShapeMismatch("composition of code morphisms with different shapes");
  }
  switch (f->tag) {
    case CodeMorphism::Tag::IotaIota:
      return mor_iota_iota(f->src, g->dst,
                           f->src->cat->compose(g->iota_f, f->iota_f));
    case CodeMorphism::Tag::SigmaSigma: {
      auto fa = f->sigma_alpha;
      auto ga = g->sigma_alpha;
      auto fr = f->sigma_rho;
      auto gr = g->sigma_rho;
      return mor_sigma_sigma(
          f->src, g->dst, [fa, ga](const Sym& a) { return ga(fa(a)); },
          [fa, fr, gr](const Sym& a) {
            return compose_plus(gr(fa(a)), fr(a));
          });
    }
    case CodeMorphism::Tag::DeltaDelta: {
      // f : delta_A F -> delta_B G with f.alpha : B -> A
      // g : delta_B G -> delta_C H with g.alpha : C -> B
      auto fa = f->delta_alpha;
      auto ga = g->delta_alpha;
      auto fr = f->delta_rho;
      auto gr = g->delta_rho;
      const std::vector<Sym> a_arity = f->src->delta.arity;
      const std::vector<Sym> b_arity = f->dst->delta.arity;
      return mor_delta_delta(
          f->src, g->dst, [fa, ga](const Sym& c) { return fa(ga(c)); },
          [fa, fr, gr, a_arity, b_arity](const ObjFamily& h) {
            return compose_plus(gr(restrict_along(a_arity, h, b_arity, fa)),
                                fr(h));
          });
    }
  }
  throw ShapeMismatch("unreachable morphism tag");
}

namespace {

// Enumerates componentwise morphism families src -> dst, capped.
std::vector<MorFamily> enumerate_mor_families(const CatPtr& cat,
                                              const ObjFamily& src,
                                              const ObjFamily& dst,
                                              const Budget& budget) {
  double count = 1;
  for (std::size_t i = 0; i < src.size(); ++i) {
    count *= static_cast<double>(cat->hom_count(src[i], dst[i]));
  }
  if (count > static_cast<double>(budget.max_enum)) {
    throw BudgetExceeded("too many morphism families to enumerate");
  }
  std::vector<std::vector<MorId>> homs;
  for (std::size_t i = 0; i < src.size(); ++i) {
    homs.push_back(cat->hom(src[i], dst[i]));
    if (homs.back().empty()) return {};
  }
  std::vector<MorFamily> out;
  MorFamily cur(src.size());
  std::vector<std::size_t> pos(src.size(), 0);
  if (src.empty()) {
    out.push_back({});
    return out;
  }
  while (true) {
    for (std::size_t i = 0; i < src.size(); ++i) cur[i] = homs[i][pos[i]];
    out.push_back(cur);
    int i = static_cast<int>(src.size()) - 1;
    while (i >= 0) {
      if (++pos[i] < homs[i].size()) break;
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

bool code_equal(const CodePtr& a, const CodePtr& b, const Budget& budget) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case IRPlusCode::Tag::Iota:
      return a->iota_c == b->iota_c;
    case IRPlusCode::Tag::Sigma: {
      if (a->sigma_arity != b->sigma_arity) return false;
      for (const Sym& x : a->sigma_arity) {
        if (!code_equal(a->sigma_branch(x), b->sigma_branch(x), budget)) {
          return false;
        }
      }
      return true;
    }
    case IRPlusCode::Tag::Delta: {
      if (a->delta.arity != b->delta.arity) return false;
      const int n = static_cast<int>(a->delta.arity.size());
      for (const auto& h :
           enumerate_obj_families(n, budget.max_objects, budget)) {
        if (!code_equal(a->delta.on_obj(h), b->delta.on_obj(h), budget)) {
          return false;
        }
      }
      // compare the morphism parts on small assignments
      for (const auto& h :
           enumerate_obj_families(n, budget.max_pair_index, budget)) {
        for (const auto& h2 :
             enumerate_obj_families(n, budget.max_pair_index, budget)) {
          for (const auto& k :
               enumerate_mor_families(a->cat, h, h2, budget)) {
            if (!code_mor_equal(a->delta.on_mor(h, h2, k),
                                b->delta.on_mor(h, h2, k), budget)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }
  return false;
}

bool code_mor_equal(const CodeMorPtr& a, const CodeMorPtr& b,
                    const Budget& budget) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  if (!code_equal(a->src, b->src, budget) ||
      !code_equal(a->dst, b->dst, budget)) {
    return false;
  }
  switch (a->tag) {
    case CodeMorphism::Tag::IotaIota:
      return a->iota_f == b->iota_f;
    case CodeMorphism::Tag::SigmaSigma: {
      for (const Sym& x : a->src->sigma_arity) {
        if (!(a->sigma_alpha(x) == b->sigma_alpha(x))) return false;
        if (!code_mor_equal(a->sigma_rho(x), b->sigma_rho(x), budget)) {
          return false;
        }
      }
      return true;
    }
    case CodeMorphism::Tag::DeltaDelta: {
      for (const Sym& x : a->dst->delta.arity) {
        if (!(a->delta_alpha(x) == b->delta_alpha(x))) return false;
      }
      const int n = static_cast<int>(a->src->delta.arity.size());
      for (const auto& h :
           enumerate_obj_families(n, budget.max_objects, budget)) {
        if (!code_mor_equal(a->delta_rho(h), b->delta_rho(h), budget)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool check_code_functorial(const CodePtr& code, const Budget& budget,
                           std::string* failure) {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return true;
    case IRPlusCode::Tag::Sigma: {
      for (const Sym& a : code->sigma_arity) {
        if (!check_code_functorial(code->sigma_branch(a), budget, failure)) {
          return false;
        }
      }
      return true;
    }
    case IRPlusCode::Tag::Delta: {
      const CodeFunctor& F = code->delta;
      const int n = static_cast<int>(F.arity.size());
      const int cap = std::min(budget.max_objects, budget.max_pair_index + 1);
      for (const auto& h : enumerate_obj_families(n, cap, budget)) {
        // identities
        MorFamily ids;
        for (int o : h) ids.push_back(F.cat->identity(o));
        if (!code_mor_equal(F.on_mor(h, h, ids), id_plus(F.on_obj(h)),
                            budget)) {
          return fail("continuation does not preserve identities");
        }
        // recurse into the continuation code
        if (!check_code_functorial(F.on_obj(h), budget, failure)) {
          return false;
        }
        // composition
        for (const auto& h2 : enumerate_obj_families(n, cap, budget)) {
          for (const auto& k : enumerate_mor_families(F.cat, h, h2, budget)) {
            for (const auto& h3 : enumerate_obj_families(n, cap, budget)) {
              for (const auto& k2 :
                   enumerate_mor_families(F.cat, h2, h3, budget)) {
                MorFamily kk;
                for (int i = 0; i < n; ++i) {
                  kk.push_back(F.cat->compose(k2[i], k[i]));
                }
                if (!code_mor_equal(
                        F.on_mor(h, h3, kk),
                        compose_plus(F.on_mor(h2, h3, k2), F.on_mor(h, h2, k)),
                        budget)) {
                  return fail("continuation does not preserve composition");
                }
              }
            }
          }
        }
      }
      return true;
    }
  }
  return fail("unreachable code tag");
}

}  // namespace irk
