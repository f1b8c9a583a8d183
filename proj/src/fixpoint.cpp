#include "irk/fixpoint.hpp"

#include <map>

#include "irk/universe.hpp"

namespace irk {

FixpointResult initial_chain(const CodePtr& code, int max_stages,
                             const Budget& budget) {
  FixpointResult out;
  out.stages.push_back(fam_empty(code->cat));
  if (max_stages == 0) return out;
  out.stages.push_back(interpret_obj(code, out.stages[0], budget));
  out.connect.push_back(make_split_morphism(
      out.stages[0], out.stages[1], [](const Sym& s) { return s; }));
  for (int j = 1; j < max_stages; ++j) {
    FamMorphism w = interpret_mor(code, out.connect.back(), budget);
    if (!is_split_cartesian(w)) out.all_split = false;
    out.stages.push_back(w.dst);
    out.connect.push_back(std::move(w));
    const auto& prev = out.stages[j];
    const auto& next = out.stages[j + 1];
    if (fam_obj_equal(prev, next) &&
        fam_mor_equal(out.connect.back(), fam_identity(prev))) {
      out.converged = true;
      out.fixed_at = j;
      return out;
    }
  }
  return out;
}

FamMorphism fold_from_chain(const CodePtr& code, const FixpointResult& chain,
                            const FamMorphism& algebra, const Budget& budget) {
  if (!chain.converged) {
    throw NotConverged("chain has no fixed point within the stage budget");
  }
  const FamObject& carrier = algebra.dst;
  if (!fam_obj_equal(algebra.src, interpret_obj(code, carrier, budget))) {
    throw ShapeMismatch(
        "algebra source is not the functor applied to its target");
  }
  FamMorphism f{fam_empty(code->cat), carrier, {}, {}};
  const int cap = chain.fixed_at + 10;
  for (int j = 0; j < cap; ++j) {
    FamMorphism next = fam_compose(algebra, interpret_mor(code, f, budget));
    if (fam_obj_equal(next.src, f.src) && fam_mor_equal(next, f)) {
      return f;
    }
    f = std::move(next);
  }
  throw NotConverged("fold iteration did not settle");
}

// ---------------------------------------------------------------------
// normal forms

namespace {

const Sym& term_head(const Sym& term) { return term.items().at(0); }

bool is_one(const Sym& t) { return term_head(t) == Sym::atom("one"); }
bool is_b(const Sym& t) { return term_head(t) == Sym::atom("b"); }
bool is_sig(const Sym& t) { return term_head(t) == Sym::atom("sig"); }

Sym sig_first(const Sym& t) {
  // (sig ((a) ((e0 ... ek) *)))
  return t.items().at(1).items().at(0).items().at(0);
}

std::vector<Sym> sig_components(const Sym& t) {
  return t.items().at(1).items().at(1).items().at(0).items();
}

Sym make_sig(const Sym& a, std::vector<Sym> es) {
  return Sym::list({Sym::atom("sig"),
                    Sym::list({Sym::list({a}),
                               Sym::list({Sym::list(std::move(es)),
                                          Sym::atom("*")})})});
}

std::vector<int> identity_table(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return t;
}

}  // namespace

int decode_card(const Sym& term, int base_card) {
  if (is_one(term)) return 1;
  if (is_b(term)) return base_card;
  if (is_sig(term)) {
    int sum = 0;
    for (const Sym& e : sig_components(term)) sum += decode_card(e, base_card);
    return sum;
  }
  throw ShapeMismatch("not a universe term: " + term.str());
}

bool nf_predicate(const Sym& term, int base_card) {
  if (is_one(term) || is_b(term)) return true;
  const Sym a = sig_first(term);
  if (!is_b(a)) return false;
  for (const Sym& e : sig_components(term)) {
    if (!nf_predicate(e, base_card)) return false;
  }
  return true;
}

NfResult nf_normalize(const Sym& term, int base_card) {
  if (is_one(term)) return {term, identity_table(1)};
  if (is_b(term)) return {term, identity_table(base_card)};
  const Sym a = sig_first(term);
  const std::vector<Sym> es = sig_components(term);
  if (is_one(a)) {
    // a pair over the unit type is its single component
    return nf_normalize(es.at(0), base_card);
  }
  if (is_b(a)) {
    std::vector<Sym> nfs;
    std::vector<NfResult> rs;
    for (const Sym& e : es) {
      rs.push_back(nf_normalize(e, base_card));
      nfs.push_back(rs.back().nf);
    }
    const Sym out = make_sig(a, nfs);
    // blockwise bijection: source and target blocks in component order
    std::vector<int> iso(decode_card(term, base_card));
    int src_off = 0;
    std::vector<int> dst_off(es.size() + 1, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      dst_off[i + 1] = dst_off[i] + decode_card(nfs[i], base_card);
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      const int d = decode_card(es[i], base_card);
      for (int v = 0; v < d; ++v) iso[src_off + v] = dst_off[i] + rs[i].iso[v];
      src_off += d;
    }
    return {out, std::move(iso)};
  }
  // nested pair-former: reassociate (sig (sig a' c) e) into
  // (sig a' (j |-> sig c_j (slice of e))) -- the decodings agree on the
  // nose since both run through the components in the same order
  const Sym a_prime = sig_first(a);
  const std::vector<Sym> cs = sig_components(a);
  std::vector<Sym> groups;
  std::size_t pos = 0;
  for (const Sym& c : cs) {
    const int dc = decode_card(c, base_card);
    std::vector<Sym> slice(es.begin() + pos, es.begin() + pos + dc);
    groups.push_back(make_sig(c, std::move(slice)));
    pos += dc;
  }
  return nf_normalize(make_sig(a_prime, std::move(groups)), base_card);
}

FamObject nf_image(const FamObject& stage, int base_card) {
  std::map<Sym, int> seen;
  for (const Sym& x : stage.index) {
    const NfResult r = nf_normalize(x, base_card);
    seen.emplace(r.nf, decode_card(r.nf, base_card));
  }
  std::vector<std::pair<Sym, int>> entries(seen.begin(), seen.end());
  return make_fam(stage.cat, std::move(entries));
}

FamMorphism nf_morphism(const FamObject& stage, int base_card) {
  const FamObject target = nf_image(stage, base_card);
  const auto& cat = stage.cat;
  FamMorphism m{stage, target, {}, {}};
  for (int i = 0; i < stage.size(); ++i) {
    const NfResult r = nf_normalize(stage.index[i], base_card);
    m.on_index.push_back(target.find_or_throw(r.nf));
    m.on_fibre.push_back(cat->intern_function(
        stage.fibre[i], decode_card(r.nf, base_card), r.iso));
  }
  check_fam_morphism(m);
  return m;
}

SuiteReport check_nf_algebra_square(const CodePtr& code,
                                    const FixpointResult& chain,
                                    int stage_index, int base_card,
                                    const Budget& budget) {
  SuiteReport report;
  report.name = "nf-algebra-square";
  const FamObject& stage = chain.stages.at(stage_index);
  const FamObject& next = chain.stages.at(stage_index + 1);
  const FamMorphism n = nf_morphism(stage, base_card);
  // functor action on normalisation; its target's index values are terms
  // over normal forms, so they normalise again
  const FamMorphism fn = interpret_mor(code, n, budget);
  const auto& cat = stage.cat;
  for (int i = 0; i < next.size(); ++i) {
    ++report.cases;
    const Sym& x = next.index[i];
    const NfResult direct = nf_normalize(x, base_card);
    // route through the algebra: push x through F(n), then normalise
    const Sym y = fn.dst.index[fn.on_index[i]];
    const NfResult after = nf_normalize(y, base_card);
    const auto k1 = cat->set_function(fn.on_fibre[i]);
    std::vector<int> composed(k1.size());
    for (std::size_t v = 0; v < k1.size(); ++v) {
      composed[v] = after.iso[k1[v]];
    }
    if (!(direct.nf == after.nf) || composed != direct.iso) {
      report.failures.push_back(
          {x.str(), direct.nf.str(), after.nf.str()});
    }
  }
  return report;
}

// ---------------------------------------------------------------------
// transport along a base-type map

CodeMorPtr ground_code_morphism(const CatPtr& cat, int b1, int b2,
                                const std::vector<int>& f) {
  const CodePtr src = sigma_universe_code(cat, b2);
  const CodePtr dst = sigma_universe_code(cat, b1);
  const MorId payload = cat->intern_function(b1, b2, f);
  return mor_sigma_sigma(
      src, dst, [](const Sym& a) { return a; },
      [cat, src, dst, payload](const Sym& a) {
        if (a == Sym::atom("base")) {
          return mor_iota_iota(src->sigma_branch(a), dst->sigma_branch(a),
                               payload);
        }
        return structural_identity(src->sigma_branch(a),
                                   dst->sigma_branch(a));
      });
}

FamMorphism ground_map_fold(const CatPtr& cat, int b1, int b2,
                            const std::vector<int>& f, int stages,
                            const Budget& budget) {
  const CodePtr g2 = sigma_universe_code(cat, b2);
  const CodePtr g1 = sigma_universe_code(cat, b1);
  const CodeMorPtr cm = ground_code_morphism(cat, b1, b2, f);
  FamObject s2 = fam_empty(cat);
  FamMorphism h{s2, fam_empty(cat), {}, {}};
  for (int j = 0; j < stages; ++j) {
    const FamMorphism step = interpret_code_mor(cm, s2, budget);
    h = fam_compose(interpret_mor(g1, h, budget), step);
    s2 = interpret_obj(g2, s2, budget);
  }
  return h;
}

}  // namespace irk
