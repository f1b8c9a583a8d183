#include "irk/bridge.hpp"

namespace irk {

CodePtr embed_plain(const IRCodePtr& code) {
  const CatPtr disc = discretisation(code->cat);
  switch (code->tag) {
    case IRCode::Tag::Iota:
      return plus_iota(disc, code->iota_c);
    case IRCode::Tag::Sigma: {
      auto branch = code->sigma_branch;
      return plus_sigma(disc, code->arity, [branch](const Sym& a) {
        return embed_plain(branch(a));
      });
    }
    case IRCode::Tag::Delta: {
      CodeFunctor f;
      f.cat = disc;
      f.arity = code->arity;
      auto fn = code->delta_fn;
      f.on_obj = [fn](const ObjFamily& h) { return embed_plain(fn(h)); };
      f.on_mor = [disc, fn](const ObjFamily& s, const ObjFamily& d,
                            const MorFamily& k) {
        // over a discrete base the only families are identities
        for (std::size_t i = 0; i < k.size(); ++i) {
          if (s[i] != d[i] || !disc->is_identity(k[i])) {
            throw NonSplitInput(
                "trivial lift applied to a non-identity family");
          }
        }
        return id_plus(embed_plain(fn(s)));
      };
      return plus_delta(std::move(f));
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

IRCodePtr forget_positive(const CodePtr& code) {
  const CatPtr disc = discretisation(code->cat);
  switch (code->tag) {
    case IRPlusCode::Tag::Iota:
      return ir_iota(disc, code->iota_c);
    case IRPlusCode::Tag::Sigma: {
      auto branch = code->sigma_branch;
      return ir_sigma(disc, code->sigma_arity, [branch](const Sym& a) {
        return forget_positive(branch(a));
      });
    }
    case IRPlusCode::Tag::Delta: {
      auto on_obj = code->delta.on_obj;
      return ir_delta(disc, code->delta.arity,
                      [on_obj](const std::vector<int>& h) {
                        return forget_positive(on_obj(h));
                      });
    }
  }
  throw ShapeMismatch("unreachable code tag");
}

bool ir_code_equal(const IRCodePtr& a, const IRCodePtr& b,
                   const Budget& budget) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case IRCode::Tag::Iota:
      return a->iota_c == b->iota_c;
    case IRCode::Tag::Sigma: {
      if (a->arity != b->arity) return false;
      for (const Sym& x : a->arity) {
        if (!ir_code_equal(a->sigma_branch(x), b->sigma_branch(x), budget)) {
          return false;
        }
      }
      return true;
    }
    case IRCode::Tag::Delta: {
      if (a->arity != b->arity) return false;
      const int n = static_cast<int>(a->arity.size());
      for (const auto& h :
           enumerate_obj_families(n, budget.max_objects, budget)) {
        if (!ir_code_equal(a->delta_fn(h), b->delta_fn(h), budget)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool check_round_trip(const IRCodePtr& code, const Budget& budget) {
  return ir_code_equal(forget_positive(embed_plain(code)), code, budget);
}

}  // namespace irk
