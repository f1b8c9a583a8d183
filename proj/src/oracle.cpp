#include "irk/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace irk {

bool Report::ok() const {
  for (const auto& s : suites) {
    if (!s.ok()) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["version"] = version;
  out["suites"] = nlohmann::json::array();
  for (const auto& s : suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["cases"] = s.cases;
    js["failures"] = nlohmann::json::array();
    for (const auto& f : s.failures) {
      js["failures"].push_back(
          {{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    }
    out["suites"].push_back(std::move(js));
  }
  return out;
}

std::vector<FamObject> enumerate_fam_objects(const CatPtr& cat,
                                             const Budget& budget) {
  std::vector<FamObject> out;
  const int max_obj = std::min(budget.max_objects, cat->object_count());
  long long total = 0;
  for (int size = 0; size <= budget.max_index; ++size) {
    for (const auto& fibres : enumerate_obj_families(size, max_obj, budget)) {
      std::vector<std::pair<Sym, int>> entries;
      for (int i = 0; i < size; ++i) entries.emplace_back(Sym::num(i), fibres[i]);
      out.push_back(make_fam(cat, std::move(entries)));
      if (++total > budget.max_enum) {
        throw BudgetExceeded("too many families to enumerate");
      }
    }
  }
  return out;
}

std::vector<FamMorphism> enumerate_fam_morphisms(const FamObject& x,
                                                 const FamObject& y,
                                                 const Budget& budget) {
  const auto& cat = x.cat;
  std::vector<FamMorphism> out;
  // all index maps h : X -> Y
  std::vector<std::vector<int>> index_maps;
  {
    const int n = x.size();
    const int m = y.size();
    double count = std::pow(static_cast<double>(m), n);
    if (count > static_cast<double>(budget.max_enum)) {
      throw BudgetExceeded("too many index maps to enumerate");
    }
    if (n == 0) {
      index_maps.push_back({});
    } else if (m > 0) {
      std::vector<int> h(n, 0);
      while (true) {
        index_maps.push_back(h);
        int i = n - 1;
        while (i >= 0) {
          if (++h[i] < m) break;
          h[i] = 0;
          --i;
        }
        if (i < 0) break;
      }
    }
  }
  for (const auto& h : index_maps) {
    // fibre choices: per position, hom(P(x), Q(h x))
    std::vector<std::vector<MorId>> homs;
    double count = 1;
    bool empty = false;
    for (int i = 0; i < x.size(); ++i) {
      homs.push_back(cat->hom(x.fibre[i], y.fibre[h[i]]));
      count *= static_cast<double>(homs.back().size());
      if (homs.back().empty()) empty = true;
    }
    if (empty) continue;
    if (count > static_cast<double>(budget.max_enum)) {
      throw BudgetExceeded("too many fibre choices to enumerate");
    }
    std::vector<std::size_t> pos(x.size(), 0);
    while (true) {
      FamMorphism m{x, y, h, {}};
      for (int i = 0; i < x.size(); ++i) m.on_fibre.push_back(homs[i][pos[i]]);
      out.push_back(std::move(m));
      if (static_cast<long long>(out.size()) > budget.max_enum) {
        throw BudgetExceeded("too many family morphisms to enumerate");
      }
      int i = x.size() - 1;
      while (i >= 0) {
        if (++pos[i] < homs[i].size()) break;
        pos[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

SuiteReport check_endofunctor_laws(const CodePtr& code, const Budget& budget) {
  SuiteReport report;
  report.name = "endofunctor-laws";
  const auto objs = enumerate_fam_objects(code->cat, budget);
  // identity preservation on all enumerated families
  for (const auto& x : objs) {
    ++report.cases;
    const auto lhs = interpret_mor(code, fam_identity(x), budget);
    const auto rhs = fam_identity(interpret_obj(code, x, budget));
    if (!fam_mor_equal(lhs, rhs)) {
      report.failures.push_back({"id at " + x.str(), rhs.str(), lhs.str()});
    }
  }
  // composition preservation on families of bounded index size; each
  // enumerated morphism is interpreted once up front
  std::vector<FamObject> small;
  for (const auto& x : objs) {
    if (x.size() <= budget.max_pair_index) small.push_back(x);
  }
  struct Interpreted {
    FamMorphism m;
    FamMorphism im;
  };
  const std::size_t n = small.size();
  std::vector<std::vector<Interpreted>> homs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& m : enumerate_fam_morphisms(small[i], small[j],
                                                   budget)) {
        homs[i * n + j].push_back({m, interpret_mor(code, m, budget)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& f : homs[i * n + j]) {
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& g : homs[j * n + k]) {
            ++report.cases;
            const auto lhs =
                interpret_mor(code, fam_compose(g.m, f.m), budget);
            const auto rhs = fam_compose(g.im, f.im);
            if (!fam_mor_equal(lhs, rhs)) {
              report.failures.push_back(
                  {"compose " + g.m.str() + " . " + f.m.str(), rhs.str(),
                   lhs.str()});
            }
          }
        }
      }
    }
  }
  return report;
}

SuiteReport check_naturality(const CodeMorPtr& cm, const Budget& budget) {
  SuiteReport report;
  report.name = "naturality";
  const auto objs = enumerate_fam_objects(cm->src->cat, budget);
  std::vector<FamObject> small;
  for (const auto& x : objs) {
    if (x.size() <= budget.max_pair_index) small.push_back(x);
  }
  for (const auto& x : small) {
    for (const auto& y : small) {
      for (const auto& m : enumerate_fam_morphisms(x, y, budget)) {
        ++report.cases;
        const auto lhs = fam_compose(interpret_code_mor(cm, y, budget),
                                     interpret_mor(cm->src, m, budget));
        const auto rhs = fam_compose(interpret_mor(cm->dst, m, budget),
                                     interpret_code_mor(cm, x, budget));
        if (!fam_mor_equal(lhs, rhs)) {
          report.failures.push_back({"at " + m.str(), rhs.str(), lhs.str()});
        }
      }
    }
  }
  return report;
}

std::optional<MorId> find_object_iso(const CatPtr& cat, int a, int b,
                                     const Budget& budget) {
  if (a == b) return cat->identity(a);
  if (cat->is_finset_like()) {
    // distinct finite-set objects have distinct cardinalities
    return std::nullopt;
  }
  if (cat->hom_count(a, b) > budget.max_enum) {
    throw BudgetExceeded("iso search: hom set too large");
  }
  for (MorId m : cat->hom(a, b)) {
    if (cat->find_inverse(m)) return m;
  }
  return std::nullopt;
}

std::optional<FamIso> find_iso(const FamObject& x, const FamObject& y,
                               const Budget& budget) {
  if (x.size() != y.size()) return std::nullopt;
  const auto& cat = x.cat;
  // greedy class-respecting pairing; witnesses remembered as we go
  std::vector<int> match(x.size(), -1);   // x position -> y position
  std::vector<MorId> wit(x.size(), -1);
  std::vector<bool> used(y.size(), false);
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      auto m = find_object_iso(cat, x.fibre[i], y.fibre[j], budget);
      if (m) {
        match[i] = j;
        wit[i] = *m;
        used[j] = true;
        break;
      }
    }
    if (match[i] < 0) return std::nullopt;
  }
  FamMorphism fwd{x, y, match, wit};
  FamMorphism bwd{y, x, std::vector<int>(y.size()),
                  std::vector<MorId>(y.size())};
  for (int i = 0; i < x.size(); ++i) {
    bwd.on_index[match[i]] = i;
    bwd.on_fibre[match[i]] = *cat->find_inverse(wit[i]);
  }
  check_fam_morphism(fwd);
  check_fam_morphism(bwd);
  return FamIso{std::move(fwd), std::move(bwd)};
}

}  // namespace irk
