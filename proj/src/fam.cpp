#include "irk/fam.hpp"

#include <algorithm>
#include <sstream>

namespace irk {

std::optional<int> FamObject::find(const Sym& x) const {
  auto it = std::lower_bound(index.begin(), index.end(), x);
  if (it != index.end() && *it == x) {
    return static_cast<int>(it - index.begin());
  }
  return std::nullopt;
}

int FamObject::find_or_throw(const Sym& x) const {
  auto p = find(x);
  if (!p) throw ShapeMismatch("index value not in family: " + x.str());
  return *p;
}

std::string FamObject::str() const {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << index[i].str() << " : " << cat->object_name(fibre[i]);
  }
  os << "}";
  return os.str();
}

FamObject make_fam(CatPtr cat, std::vector<std::pair<Sym, int>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FamObject out;
  out.cat = std::move(cat);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw ShapeMismatch("duplicate index value: " + entries[i].first.str());
    }
    out.index.push_back(entries[i].first);
    out.fibre.push_back(entries[i].second);
  }
  return out;
}

bool fam_obj_equal(const FamObject& a, const FamObject& b) {
  return a.index == b.index && a.fibre == b.fibre;
}

Sym FamMorphism::apply(const Sym& x) const {
  return dst.index.at(on_index.at(src.find_or_throw(x)));
}

std::string FamMorphism::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < src.size(); ++i) {
    if (i) os << ", ";
    os << src.index[i].str() << " -[" << on_fibre[i] << "]-> "
       << dst.index[on_index[i]].str();
  }
  os << "]";
  return os.str();
}

void check_fam_morphism(const FamMorphism& m) {
  const auto& c = m.src.cat;
  if (static_cast<int>(m.on_index.size()) != m.src.size() ||
      static_cast<int>(m.on_fibre.size()) != m.src.size()) {
    throw ShapeMismatch("family morphism component count mismatch");
  }
  for (int i = 0; i < m.src.size(); ++i) {
    const int j = m.on_index[i];
    if (j < 0 || j >= m.dst.size()) {
      throw ShapeMismatch("index image out of range");
    }
    if (c->mor_src(m.on_fibre[i]) != m.src.fibre[i] ||
        c->mor_dst(m.on_fibre[i]) != m.dst.fibre[j]) {
      throw EndpointMismatch("fibre component endpoints at " +
                             m.src.index[i].str());
    }
  }
}

FamMorphism fam_identity(const FamObject& x) {
  FamMorphism m{x, x, {}, {}};
  for (int i = 0; i < x.size(); ++i) {
    m.on_index.push_back(i);
    m.on_fibre.push_back(x.cat->identity(x.fibre[i]));
  }
  return m;
}

FamMorphism fam_compose(const FamMorphism& g, const FamMorphism& f) {
  if (!fam_obj_equal(f.dst, g.src)) {
    throw EndpointMismatch("family composition: middle objects differ");
  }
  FamMorphism m{f.src, g.dst, {}, {}};
  for (int i = 0; i < f.src.size(); ++i) {
    const int j = f.on_index[i];
    m.on_index.push_back(g.on_index[j]);
    m.on_fibre.push_back(f.src.cat->compose(g.on_fibre[j], f.on_fibre[i]));
  }
  return m;
}

bool fam_mor_equal(const FamMorphism& a, const FamMorphism& b) {
  return fam_obj_equal(a.src, b.src) && fam_obj_equal(a.dst, b.dst) &&
         a.on_index == b.on_index && a.on_fibre == b.on_fibre;
}

bool is_split_cartesian(const FamMorphism& m) {
  for (MorId k : m.on_fibre) {
    if (!m.src.cat->is_identity(k)) return false;
  }
  return true;
}

FamMorphism make_fam_morphism(const FamObject& src, const FamObject& dst,
                              const std::function<Sym(const Sym&)>& h,
                              const std::function<MorId(const Sym&)>& k) {
  FamMorphism m{src, dst, {}, {}};
  for (int i = 0; i < src.size(); ++i) {
    m.on_index.push_back(dst.find_or_throw(h(src.index[i])));
    m.on_fibre.push_back(k(src.index[i]));
  }
  check_fam_morphism(m);
  return m;
}

FamMorphism make_split_morphism(const FamObject& src, const FamObject& dst,
                                const std::function<Sym(const Sym&)>& h) {
  return make_fam_morphism(src, dst, h, [&](const Sym& x) {
    return src.cat->identity(src.fibre[src.find_or_throw(x)]);
  });
}

FamObject fam_sum(const CatPtr& cat, const std::vector<FamObject>& parts,
                  const std::vector<std::function<Sym(const Sym&)>>& taggers) {
  if (parts.size() != taggers.size()) {
    throw ShapeMismatch("coproduct: parts/taggers arity mismatch");
  }
  std::vector<std::pair<Sym, int>> entries;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int i = 0; i < parts[p].size(); ++i) {
      entries.emplace_back(taggers[p](parts[p].index[i]), parts[p].fibre[i]);
    }
  }
  return make_fam(cat, std::move(entries));
}

FamCoproduct fam_coproduct(
    const CatPtr& cat, const std::vector<FamObject>& parts,
    const std::vector<std::function<Sym(const Sym&)>>& taggers) {
  FamCoproduct out;
  out.sum = fam_sum(cat, parts, taggers);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    out.injections.push_back(
        make_split_morphism(parts[p], out.sum, taggers[p]));
  }
  return out;
}

bool check_fam_iso(const FamIso& iso, std::string* failure) {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  if (!fam_obj_equal(iso.fwd.dst, iso.bwd.src) ||
      !fam_obj_equal(iso.bwd.dst, iso.fwd.src)) {
    return fail("iso endpoints do not match up");
  }
  if (!fam_mor_equal(fam_compose(iso.bwd, iso.fwd),
                     fam_identity(iso.fwd.src))) {
    return fail("bwd . fwd is not the identity");
  }
  if (!fam_mor_equal(fam_compose(iso.fwd, iso.bwd),
                     fam_identity(iso.bwd.src))) {
    return fail("fwd . bwd is not the identity");
  }
  return true;
}

FamObject fam_empty(const CatPtr& cat) {
  FamObject x;
  x.cat = cat;
  return x;
}

}  // namespace irk
