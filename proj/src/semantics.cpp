#include "irk/semantics.hpp"

namespace irk {

namespace {

Sym assignment_tag(const std::vector<int>& g, const FamObject& x) {
  std::vector<Sym> parts;
  parts.reserve(g.size());
  for (int p : g) parts.push_back(x.index[p]);
  return Sym::list(std::move(parts));
}

// Builds a family morphism from a per-position choice of target index
// value and fibre component.
FamMorphism assemble(const FamObject& src, const FamObject& dst,
                     const std::function<std::pair<Sym, MorId>(int)>& at) {
  FamMorphism m{src, dst, {}, {}};
  for (int i = 0; i < src.size(); ++i) {
    auto [tgt, fib] = at(i);
    m.on_index.push_back(dst.find_or_throw(tgt));
    m.on_fibre.push_back(fib);
  }
  check_fam_morphism(m);
  return m;
}

}  // namespace

FamObject interpret_obj(const CodePtr& code, const FamObject& x,
                        const Budget& budget) {
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return make_fam(code->cat, {{Sym::atom("*"), code->iota_c}});
    case IRPlusCode::Tag::Sigma: {
      std::vector<FamObject> parts;
      std::vector<std::function<Sym(const Sym&)>> taggers;
      for (const Sym& a : code->sigma_arity) {
        parts.push_back(interpret_obj(code->sigma_branch(a), x, budget));
        taggers.push_back([a](const Sym& s) { return Sym::list({a, s}); });
      }
      return fam_sum(code->cat, parts, taggers);
    }
    case IRPlusCode::Tag::Delta: {
      const int n = static_cast<int>(code->delta.arity.size());
      std::vector<FamObject> parts;
      std::vector<std::function<Sym(const Sym&)>> taggers;
      long long total = 0;
      for (const auto& g : enumerate_assignments(n, x, budget)) {
        ObjFamily decodings;
        decodings.reserve(g.size());
        for (int p : g) decodings.push_back(x.fibre[p]);
        parts.push_back(
            interpret_obj(code->delta.on_obj(decodings), x, budget));
        total += parts.back().size();
        if (total > budget.max_enum) {
          throw BudgetExceeded("interpreted family exceeds the element budget");
        }
        const Sym tag = assignment_tag(g, x);
        taggers.push_back([tag](const Sym& s) { return Sym::list({tag, s}); });
      }
      return fam_sum(code->cat, parts, taggers);
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

FamMorphism interpret_mor(const CodePtr& code, const FamMorphism& m,
                          const Budget& budget) {
  const FamObject fx = interpret_obj(code, m.src, budget);
  const FamObject fy = interpret_obj(code, m.dst, budget);
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return assemble(fx, fy, [&](int) {
        return std::make_pair(Sym::atom("*"),
                              code->cat->identity(code->iota_c));
      });
    case IRPlusCode::Tag::Sigma: {
      // one recursive action per branch, reused across its positions
      std::vector<FamMorphism> per_branch;
      for (const Sym& a : code->sigma_arity) {
        per_branch.push_back(
            interpret_mor(code->sigma_branch(a), m, budget));
      }
      return assemble(fx, fy, [&](int i) {
        const auto& items = fx.index[i].items();
        const Sym& a = items.at(0);
        const Sym& inner = items.at(1);
        const FamMorphism& r =
            per_branch[arity_position(code->sigma_arity, a)];
        const int p = r.src.find_or_throw(inner);
        return std::make_pair(Sym::list({a, r.dst.index[r.on_index[p]]}),
                              r.on_fibre[p]);
      });
    }
    case IRPlusCode::Tag::Delta: {
      const int n = static_cast<int>(code->delta.arity.size());
      // per summand g : A -> X, the composite component
      //   [[F->(g*(k))]](X,P) ; [[F(Q.h.g)]](h,k)
      struct Summand {
        Sym tag;       // over X
        Sym moved;     // the image tag over Y
        FamMorphism comp;
      };
      std::vector<Summand> summands;
      for (const auto& g : enumerate_assignments(n, m.src, budget)) {
        ObjFamily src_dec, dst_dec;
        MorFamily k_along;
        std::vector<Sym> moved;
        for (int p : g) {
          src_dec.push_back(m.src.fibre[p]);
          dst_dec.push_back(m.dst.fibre[m.on_index[p]]);
          k_along.push_back(m.on_fibre[p]);
          moved.push_back(m.dst.index[m.on_index[p]]);
        }
        const CodeMorPtr lifted =
            code->delta.on_mor(src_dec, dst_dec, k_along);
        const FamMorphism first =
            interpret_code_mor(lifted, m.src, budget);
        const FamMorphism second =
            interpret_mor(code->delta.on_obj(dst_dec), m, budget);
        summands.push_back({assignment_tag(g, m.src), Sym::list(moved),
                            fam_compose(second, first)});
      }
      return assemble(fx, fy, [&](int i) {
        const auto& items = fx.index[i].items();
        const Sym& gtag = items.at(0);
        const Sym& inner = items.at(1);
        for (const auto& s : summands) {
          if (s.tag == gtag) {
            const int p = s.comp.src.find_or_throw(inner);
            return std::make_pair(
                Sym::list({s.moved, s.comp.dst.index[s.comp.on_index[p]]}),
                s.comp.on_fibre[p]);
          }
        }
        throw ShapeMismatch("summand tag not found: " + gtag.str());
      });
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

FamMorphism interpret_code_mor(const CodeMorPtr& cm, const FamObject& x,
                               const Budget& budget) {
  const FamObject fx = interpret_obj(cm->src, x, budget);
  const FamObject fy = interpret_obj(cm->dst, x, budget);
  switch (cm->tag) {
    case CodeMorphism::Tag::IotaIota:
      return assemble(fx, fy, [&](int) {
        return std::make_pair(Sym::atom("*"), cm->iota_f);
      });
    case CodeMorphism::Tag::SigmaSigma: {
      std::vector<FamMorphism> per_branch;
      for (const Sym& a : cm->src->sigma_arity) {
        per_branch.push_back(
            interpret_code_mor(cm->sigma_rho(a), x, budget));
      }
      return assemble(fx, fy, [&](int i) {
        const auto& items = fx.index[i].items();
        const Sym& a = items.at(0);
        const Sym& inner = items.at(1);
        const FamMorphism& r =
            per_branch[arity_position(cm->src->sigma_arity, a)];
        const int p = r.src.find_or_throw(inner);
        return std::make_pair(
            Sym::list({cm->sigma_alpha(a), r.dst.index[r.on_index[p]]}),
            r.on_fibre[p]);
      });
    }
    case CodeMorphism::Tag::DeltaDelta: {
      // delta_A F -> delta_B G with alpha : B -> A; a summand g : A -> X
      // goes to g . alpha : B -> X with component [[rho(P.g)]](X,P)
      const std::vector<Sym>& a_arity = cm->src->delta.arity;
      const std::vector<Sym>& b_arity = cm->dst->delta.arity;
      const int n = static_cast<int>(a_arity.size());
      struct Summand {
        Sym tag;
        Sym moved;
        FamMorphism comp;
      };
      std::vector<Summand> summands;
      for (const auto& g : enumerate_assignments(n, x, budget)) {
        ObjFamily dec;
        for (int p : g) dec.push_back(x.fibre[p]);
        std::vector<Sym> moved;
        for (const Sym& b : b_arity) {
          const int ap = arity_position(a_arity, cm->delta_alpha(b));
          moved.push_back(x.index[g[ap]]);
        }
        summands.push_back({assignment_tag(g, x), Sym::list(moved),
                            interpret_code_mor(cm->delta_rho(dec), x, budget)});
      }
      return assemble(fx, fy, [&](int i) {
        const auto& items = fx.index[i].items();
        const Sym& gtag = items.at(0);
        const Sym& inner = items.at(1);
        for (const auto& s : summands) {
          if (s.tag == gtag) {
            const int p = s.comp.src.find_or_throw(inner);
            return std::make_pair(
                Sym::list({s.moved, s.comp.dst.index[s.comp.on_index[p]]}),
                s.comp.on_fibre[p]);
          }
        }
        throw ShapeMismatch("summand tag not found: " + gtag.str());
      });
    }
  }
  throw ShapeMismatch("unreachable morphism tag");
}

}  // namespace irk
