#include "irk/container.hpp"

#include <cmath>

namespace irk {

bool container_equal(const Container& a, const Container& b) {
  return a.positions == b.positions;
}

long long extension_count(const Container& c, long long x_card) {
  long long total = 0;
  for (int p : c.positions) {
    long long term = 1;
    for (int i = 0; i < p; ++i) {
      term *= x_card;
      if (term > (1ll << 56)) return 1ll << 56;  // saturate
    }
    total += term;
  }
  return total;
}

std::vector<Sym> extension_elements(const Container& c,
                                    const std::vector<Sym>& xs,
                                    const Budget& budget) {
  if (extension_count(c, static_cast<long long>(xs.size())) >
      budget.max_enum) {
    throw BudgetExceeded("extension too large to enumerate");
  }
  std::vector<Sym> out;
  for (int s = 0; s < c.shapes(); ++s) {
    const int p = c.positions[s];
    if (p == 0) {
      out.push_back(Sym::list({Sym::num(s), Sym::list({})}));
      continue;
    }
    if (xs.empty()) continue;
    std::vector<int> t(p, 0);
    while (true) {
      std::vector<Sym> vals;
      for (int i = 0; i < p; ++i) vals.push_back(xs[t[i]]);
      out.push_back(Sym::list({Sym::num(s), Sym::list(std::move(vals))}));
      int i = p - 1;
      while (i >= 0) {
        if (++t[i] < static_cast<int>(xs.size())) break;
        t[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

Container cont_coproduct(const Container& a, const Container& b) {
  Container out = a;
  out.positions.insert(out.positions.end(), b.positions.begin(),
                       b.positions.end());
  return out;
}

Container cont_product(const Container& a, const Container& b) {
  Container out;
  for (int pa : a.positions) {
    for (int pb : b.positions) out.positions.push_back(pa + pb);
  }
  return out;
}

Container cont_compose(const Container& a, const Container& b) {
  Container out;
  const int sb = b.shapes();
  for (int pa : a.positions) {
    // one composite shape per assignment of a b-shape to each a-position
    if (pa == 0) {
      out.positions.push_back(0);
      continue;
    }
    if (sb == 0) continue;
    std::vector<int> f(pa, 0);
    while (true) {
      int total = 0;
      for (int p = 0; p < pa; ++p) total += b.positions[f[p]];
      out.positions.push_back(total);
      int i = pa - 1;
      while (i >= 0) {
        if (++f[i] < sb) break;
        f[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

namespace {

NestPtr make_nest(NestExpr e) {
  return std::make_shared<NestExpr>(std::move(e));
}

}  // namespace

NestPtr nest_id() { return make_nest({NestExpr::Tag::Id, {}, nullptr, nullptr}); }

NestPtr nest_k(Container c) {
  return make_nest({NestExpr::Tag::K, std::move(c), nullptr, nullptr});
}

NestPtr nest_plus(NestPtr a, NestPtr b) {
  return make_nest({NestExpr::Tag::Plus, {}, std::move(a), std::move(b)});
}

NestPtr nest_times(NestPtr a, NestPtr b) {
  return make_nest({NestExpr::Tag::Times, {}, std::move(a), std::move(b)});
}

NestPtr nest_compose(NestPtr a, NestPtr b) {
  return make_nest({NestExpr::Tag::Compose, {}, std::move(a), std::move(b)});
}

Container interpret_nest(const NestPtr& n, const Container& c) {
  switch (n->tag) {
    case NestExpr::Tag::Id:
      return c;
    case NestExpr::Tag::K:
      return n->constant;
    case NestExpr::Tag::Plus:
      return cont_coproduct(interpret_nest(n->lhs, c),
                            interpret_nest(n->rhs, c));
    case NestExpr::Tag::Times:
      return cont_product(interpret_nest(n->lhs, c),
                          interpret_nest(n->rhs, c));
    case NestExpr::Tag::Compose:
      return cont_compose(interpret_nest(n->lhs, c),
                          interpret_nest(n->rhs, c));
  }
  throw ShapeMismatch("unreachable nest tag");
}

long long direct_nest_count(const NestPtr& n, const Container& c,
                            long long x_card) {
  switch (n->tag) {
    case NestExpr::Tag::Id:
      return extension_count(c, x_card);
    case NestExpr::Tag::K:
      return extension_count(n->constant, x_card);
    case NestExpr::Tag::Plus:
      return direct_nest_count(n->lhs, c, x_card) +
             direct_nest_count(n->rhs, c, x_card);
    case NestExpr::Tag::Times:
      return direct_nest_count(n->lhs, c, x_card) *
             direct_nest_count(n->rhs, c, x_card);
    case NestExpr::Tag::Compose:
      return direct_nest_count(n->lhs, c,
                               direct_nest_count(n->rhs, c, x_card));
  }
  throw ShapeMismatch("unreachable nest tag");
}

NestPtr lam_example() {
  const Container identity{{1}};
  const Container binder{{1, 0}};
  return nest_plus(nest_k(identity),
                   nest_plus(nest_times(nest_id(), nest_id()),
                             nest_compose(nest_id(), nest_k(binder))));
}

FamObject container_to_family(const Container& c, const CatPtr& cat) {
  std::vector<std::pair<Sym, int>> entries;
  for (int s = 0; s < c.shapes(); ++s) {
    if (!cat->object_of_card(c.positions[s])) {
      throw ShapeMismatch("position count exceeds the category's objects");
    }
    entries.emplace_back(Sym::num(s), c.positions[s]);
  }
  return make_fam(cat, std::move(entries));
}

Container family_to_container(const FamObject& x) {
  Container out;
  out.positions = x.fibre;
  return out;
}

}  // namespace irk
