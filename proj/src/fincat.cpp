#include "irk/fincat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace irk {

namespace {

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    r *= b;
    if (r > (1ll << 56)) return 1ll << 56;  // saturate
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// construction

CatPtr FinCategory::discrete(std::vector<std::string> object_names) {
  TableData d;
  d.object_names = std::move(object_names);
  const int n = static_cast<int>(d.object_names.size());
  for (int i = 0; i < n; ++i) {
    d.mor_ends.emplace_back(i, i);
    d.identities.push_back(i);
    d.comp[{i, i}] = i;
  }
  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  c->kind_ = Kind::Table;
  c->table_ = std::move(d);
  std::ostringstream os;
  os << "discrete(" << n << ")";
  c->name_ = os.str();
  return c;
}

CatPtr FinCategory::discrete(int n_objects) {
  std::vector<std::string> names;
  for (int i = 0; i < n_objects; ++i) names.push_back("o" + std::to_string(i));
  return discrete(std::move(names));
}

CatPtr FinCategory::finset(int max_card) {
  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  c->kind_ = Kind::FinSet;
  c->max_card_ = max_card;
  c->name_ = "finset(" + std::to_string(max_card) + ")";
  return c;
}

CatPtr FinCategory::from_table(TableData data) {
  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  c->kind_ = Kind::Table;
  c->table_ = std::move(data);
  c->name_ = "table";
  return c;
}

CatPtr FinCategory::opposite() const {
  if (kind_ == Kind::Opposite) return base_;
  auto self = shared_from_this();
  // Discrete categories are self-dual on the nose.
  if (kind_ == Kind::Table) {
    bool discrete_cat = true;
    for (std::size_t m = 0; m < table_.mor_ends.size(); ++m) {
      if (table_.mor_ends[m].first != table_.mor_ends[m].second ||
          table_.identities[table_.mor_ends[m].first] !=
              static_cast<MorId>(m)) {
        discrete_cat = false;
        break;
      }
    }
    if (discrete_cat) return self;
  }
  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  c->kind_ = Kind::Opposite;
  c->base_ = self;
  c->name_ = "op(" + name_ + ")";
  return c;
}

CatPtr FinCategory::core_groupoid() const {
  auto self = shared_from_this();
  if (kind_ == Kind::Table) {
    // Discrete categories are their own core.
    bool all_identities = true;
    for (std::size_t m = 0; m < table_.mor_ends.size(); ++m) {
      if (!is_identity(static_cast<MorId>(m))) {
        all_identities = false;
        break;
      }
    }
    if (all_identities) return self;
  }
  if (kind_ == Kind::Core) return self;
  auto c = std::shared_ptr<FinCategory>(new FinCategory());
  c->kind_ = Kind::Core;
  c->base_ = self;
  c->name_ = "core(" + name_ + ")";
  return c;
}

// ---------------------------------------------------------------------------
// fs intern store

const FinCategory* FinCategory::finset_root() const {
  const FinCategory* c = this;
  while (c->kind_ == Kind::Opposite || c->kind_ == Kind::Core) {
    c = c->base_.get();
  }
  return c->kind_ == Kind::FinSet ? c : nullptr;
}

MorId FinCategory::fs_intern(int a, int b, std::vector<int> table) const {
  const FinCategory* root = finset_root();
  std::lock_guard<std::mutex> lock(root->mu_);
  auto key = std::make_tuple(a, b, table);
  auto it = root->fs_index_.find(key);
  if (it != root->fs_index_.end()) return it->second;
  MorId id = static_cast<MorId>(root->fs_mors_.size());
  root->fs_mors_.push_back(FinSetMor{a, b, std::move(table)});
  root->fs_index_.emplace(std::move(key), id);
  return id;
}

const FinCategory::FinSetMor& FinCategory::fs_mor(MorId m) const {
  const FinCategory* root = finset_root();
  std::lock_guard<std::mutex> lock(root->mu_);
  return root->fs_mors_.at(static_cast<std::size_t>(m));
}

// ---------------------------------------------------------------------------
// basic structure

int FinCategory::object_count() const {
  switch (kind_) {
    case Kind::Table:
      return static_cast<int>(table_.object_names.size());
    case Kind::FinSet:
      return max_card_ + 1;
    case Kind::Opposite:
    case Kind::Core:
      return base_->object_count();
  }
  return 0;
}

std::string FinCategory::object_name(int obj) const {
  switch (kind_) {
    case Kind::Table:
      return table_.object_names.at(obj);
    case Kind::FinSet:
      return "Fin" + std::to_string(obj);
    case Kind::Opposite:
    case Kind::Core:
      return base_->object_name(obj);
  }
  return "?";
}

int FinCategory::mor_src(MorId m) const {
  switch (kind_) {
    case Kind::Table:
      return table_.mor_ends.at(static_cast<std::size_t>(m)).first;
    case Kind::FinSet:
      return fs_mor(m).src;
    case Kind::Opposite:
      return base_->mor_dst(m);
    case Kind::Core:
      return base_->mor_src(m);
  }
  return -1;
}

int FinCategory::mor_dst(MorId m) const {
  switch (kind_) {
    case Kind::Table:
      return table_.mor_ends.at(static_cast<std::size_t>(m)).second;
    case Kind::FinSet:
      return fs_mor(m).dst;
    case Kind::Opposite:
      return base_->mor_src(m);
    case Kind::Core:
      return base_->mor_dst(m);
  }
  return -1;
}

MorId FinCategory::identity(int obj) const {
  switch (kind_) {
    case Kind::Table:
      return table_.identities.at(obj);
    case Kind::FinSet: {
      std::vector<int> t(obj);
      for (int i = 0; i < obj; ++i) t[i] = i;
      return fs_intern(obj, obj, std::move(t));
    }
    case Kind::Opposite:
    case Kind::Core:
      return base_->identity(obj);
  }
  return -1;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (mor_dst(f) != mor_src(g)) {
    throw EndpointMismatch("compose: dst(f) != src(g) in " + name_);
  }
  switch (kind_) {
    case Kind::Table: {
      auto it = table_.comp.find({g, f});
      if (it == table_.comp.end()) {
        throw EndpointMismatch("compose: pair not in composition table");
      }
      return it->second;
    }
    case Kind::FinSet: {
      const FinSetMor mf = fs_mor(f);
      const FinSetMor mg = fs_mor(g);
      std::vector<int> t(mf.table.size());
      for (std::size_t i = 0; i < mf.table.size(); ++i) {
        t[i] = mg.table[mf.table[i]];
      }
      return fs_intern(mf.src, mg.dst, std::move(t));
    }
    case Kind::Opposite:
      return base_->compose(f, g);
    case Kind::Core:
      return base_->compose(g, f);
  }
  return -1;
}

bool FinCategory::is_identity(MorId m) const {
  switch (kind_) {
    case Kind::Table:
      return table_.identities.at(table_.mor_ends.at(m).first) == m &&
             table_.mor_ends.at(m).first == table_.mor_ends.at(m).second;
    case Kind::FinSet: {
      const FinSetMor d = fs_mor(m);
      if (d.src != d.dst) return false;
      for (std::size_t i = 0; i < d.table.size(); ++i) {
        if (d.table[i] != static_cast<int>(i)) return false;
      }
      return true;
    }
    case Kind::Opposite:
    case Kind::Core:
      return base_->is_identity(m);
  }
  return false;
}

std::optional<MorId> FinCategory::find_inverse(MorId m) const {
  switch (kind_) {
    case Kind::Table: {
      const int a = mor_src(m);
      const int b = mor_dst(m);
      for (MorId k = 0; k < static_cast<MorId>(table_.mor_ends.size()); ++k) {
        if (mor_src(k) != b || mor_dst(k) != a) continue;
        if (table_.comp.at({k, m}) == identity(a) &&
            table_.comp.at({m, k}) == identity(b)) {
          return k;
        }
      }
      return std::nullopt;
    }
    case Kind::FinSet: {
      const FinSetMor d = fs_mor(m);
      if (d.src != d.dst) return std::nullopt;
      std::vector<int> inv(d.table.size(), -1);
      for (std::size_t i = 0; i < d.table.size(); ++i) {
        if (inv[d.table[i]] != -1) return std::nullopt;  // not injective
        inv[d.table[i]] = static_cast<int>(i);
      }
      return fs_intern(d.src, d.src, std::move(inv));
    }
    case Kind::Opposite:
    case Kind::Core:
      return base_->find_inverse(m);
  }
  return std::nullopt;
}

long long FinCategory::hom_count(int a, int b) const {
  switch (kind_) {
    case Kind::Table: {
      long long n = 0;
      for (std::size_t m = 0; m < table_.mor_ends.size(); ++m) {
        if (table_.mor_ends[m].first == a && table_.mor_ends[m].second == b) {
          ++n;
        }
      }
      return n;
    }
    case Kind::FinSet:
      return ipow(b, a);  // all functions Fin a -> Fin b
    case Kind::Opposite:
      return base_->hom_count(b, a);
    case Kind::Core: {
      if (base_->kind_ == Kind::FinSet) {
        if (a != b) return 0;
        long long f = 1;
        for (int i = 2; i <= a; ++i) f *= i;
        return f;
      }
      // generic: enumerate and filter
      long long n = 0;
      for (MorId m : base_->hom(a, b)) {
        if (base_->find_inverse(m)) ++n;
      }
      return n;
    }
  }
  return 0;
}

std::vector<MorId> FinCategory::hom(int a, int b) const {
  switch (kind_) {
    case Kind::Table: {
      std::vector<MorId> out;
      for (std::size_t m = 0; m < table_.mor_ends.size(); ++m) {
        if (table_.mor_ends[m].first == a && table_.mor_ends[m].second == b) {
          out.push_back(static_cast<MorId>(m));
        }
      }
      return out;
    }
    case Kind::FinSet: {
      const long long n = hom_count(a, b);
      if (n > 1000000) {
        throw BudgetExceeded("hom(" + object_name(a) + "," + object_name(b) +
                             ") too large to enumerate");
      }
      std::vector<MorId> out;
      std::vector<int> t(a, 0);
      if (a == 0) {
        out.push_back(fs_intern(0, b, {}));
        return out;
      }
      if (b == 0) return out;  // no map into the empty set
      while (true) {
        out.push_back(fs_intern(a, b, t));
        int i = a - 1;
        while (i >= 0) {
          if (++t[i] < b) break;
          t[i] = 0;
          --i;
        }
        if (i < 0) break;
      }
      return out;
    }
    case Kind::Opposite:
      return base_->hom(b, a);
    case Kind::Core: {
      std::vector<MorId> out;
      for (MorId m : base_->hom(a, b)) {
        if (base_->find_inverse(m)) out.push_back(m);
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// finset-like helpers

bool FinCategory::is_finset_like() const { return finset_root() != nullptr; }

int FinCategory::card(int obj) const {
  if (!is_finset_like()) {
    throw EndpointMismatch("card: category is not finset-like");
  }
  return obj;  // object id is its cardinality
}

std::optional<int> FinCategory::object_of_card(int c) const {
  if (!is_finset_like()) return std::nullopt;
  if (c < 0 || c > finset_root()->max_card_) return std::nullopt;
  return c;
}

std::vector<int> FinCategory::set_function(MorId m) const {
  if (!is_finset_like()) {
    throw EndpointMismatch("set_function: category is not finset-like");
  }
  return fs_mor(m).table;
}

MorId FinCategory::intern_function(int a, int b,
                                   const std::vector<int>& table) const {
  if (!is_finset_like()) {
    throw EndpointMismatch("intern_function: category is not finset-like");
  }
  if (static_cast<int>(table.size()) != a) {
    throw EndpointMismatch("intern_function: table size != src cardinality");
  }
  for (int v : table) {
    if (v < 0 || v >= b) {
      throw EndpointMismatch("intern_function: value out of range");
    }
  }
  return fs_intern(a, b, table);
}

std::optional<int> FinCategory::product_object(
    const std::vector<int>& objs) const {
  switch (kind_) {
    case Kind::FinSet: {
      long long p = 1;
      for (int o : objs) p *= o;
      return object_of_card(static_cast<int>(p));
    }
    case Kind::Opposite: {
      if (base_->kind_ != Kind::FinSet) return std::nullopt;
      long long s = 0;
      for (int o : objs) s += o;
      return object_of_card(static_cast<int>(s));
    }
    default:
      return std::nullopt;
  }
}

std::optional<MorId> FinCategory::product_morphism(
    const std::vector<MorId>& ms) const {
  switch (kind_) {
    case Kind::FinSet: {
      // cartesian product of functions, row-major tuples
      std::vector<int> srcs, dsts;
      for (MorId m : ms) {
        srcs.push_back(mor_src(m));
        dsts.push_back(mor_dst(m));
      }
      auto sp = product_object(srcs);
      auto dp = product_object(dsts);
      if (!sp || !dp) return std::nullopt;
      std::vector<int> t(static_cast<std::size_t>(*sp));
      std::vector<int> tuple(ms.size(), 0);
      for (int idx = 0; idx < *sp; ++idx) {
        // decode row-major tuple
        int rem = idx;
        for (int k = static_cast<int>(ms.size()) - 1; k >= 0; --k) {
          tuple[k] = rem % srcs[k];
          rem /= srcs[k];
        }
        int out = 0;
        for (std::size_t k = 0; k < ms.size(); ++k) {
          out = out * dsts[k] + set_function(ms[k])[tuple[k]];
        }
        t[idx] = out;
      }
      return fs_intern(*sp, *dp, std::move(t));
    }
    case Kind::Opposite: {
      if (base_->kind_ != Kind::FinSet) return std::nullopt;
      // product in op = coproduct of functions in Set, blockwise offsets
      std::vector<int> srcs, dsts;  // in this category's direction
      for (MorId m : ms) {
        srcs.push_back(mor_src(m));
        dsts.push_back(mor_dst(m));
      }
      auto sp = product_object(srcs);
      auto dp = product_object(dsts);
      if (!sp || !dp) return std::nullopt;
      // base-direction function: sum(dsts) -> sum(srcs)
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(*dp));
      int src_off = 0;
      for (std::size_t k = 0; k < ms.size(); ++k) {
        const std::vector<int> fk = set_function(ms[k]);  // dsts[k] -> srcs[k]
        for (int v : fk) t.push_back(src_off + v);
        src_off += srcs[k];
      }
      return fs_intern(*dp, *sp, std::move(t));
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// law checking and structural comparison

bool FinCategory::check_laws(std::string* failure, int max_objects) const {
  const int n = max_objects > 0 ? std::min(max_objects, object_count())
                                : object_count();
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  // collect all morphisms between objects (only viable for small categories)
  std::vector<MorId> all;
  std::vector<std::vector<std::vector<MorId>>> h(
      n, std::vector<std::vector<MorId>>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      h[a][b] = hom(a, b);
      for (MorId m : h[a][b]) {
        if (mor_src(m) != a || mor_dst(m) != b) {
          return fail("hom endpoints disagree with mor_src/mor_dst");
        }
        all.push_back(m);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    const MorId id = identity(a);
    if (mor_src(id) != a || mor_dst(id) != a) return fail("identity endpoints");
    if (std::find(h[a][a].begin(), h[a][a].end(), id) == h[a][a].end()) {
      return fail("identity(" + object_name(a) + ") not in hom");
    }
  }
  // unit laws
  for (MorId m : all) {
    if (compose(m, identity(mor_src(m))) != m) return fail("right unit");
    if (compose(identity(mor_dst(m)), m) != m) return fail("left unit");
  }
  // associativity, over composable triples only
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (MorId f : h[a][b]) {
        for (int c = 0; c < n; ++c) {
          for (MorId g : h[b][c]) {
            const MorId gf = compose(g, f);
            for (int d = 0; d < n; ++d) {
              for (MorId k : h[c][d]) {
                if (compose(k, gf) != compose(compose(k, g), f)) {
                  return fail("associativity");
                }
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool FinCategory::structurally_equal(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  const int n = a->object_count();
  if (n != b->object_count()) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a->hom_count(x, y) != b->hom_count(x, y)) return false;
    }
  }
  // compare composition via the canonical hom-order bijection
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto ha = a->hom(x, y);
      auto hb = b->hom(x, y);
      for (int z = 0; z < n; ++z) {
        auto ga = a->hom(y, z);
        auto gb = b->hom(y, z);
        for (std::size_t i = 0; i < ha.size(); ++i) {
          for (std::size_t j = 0; j < ga.size(); ++j) {
            auto ca = a->compose(ga[j], ha[i]);
            auto cb = b->compose(gb[j], hb[i]);
            auto hz_a = a->hom(x, z);
            auto hz_b = b->hom(x, z);
            auto pa = std::find(hz_a.begin(), hz_a.end(), ca) - hz_a.begin();
            auto pb = std::find(hz_b.begin(), hz_b.end(), cb) - hz_b.begin();
            if (pa != pb) return false;
          }
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    auto ha = a->hom(x, x);
    auto hb = b->hom(x, x);
    auto pa = std::find(ha.begin(), ha.end(), a->identity(x)) - ha.begin();
    auto pb = std::find(hb.begin(), hb.end(), b->identity(x)) - hb.begin();
    if (pa != pb) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// functors

bool check_cat_functor(const CatFunctor& f, const Budget& budget,
                       std::string* failure) {
  auto fail = [&](const std::string& msg) {
    if (failure) *failure = msg;
    return false;
  };
  const int n = std::min(f.src->object_count(), budget.max_objects);
  for (int a = 0; a < n; ++a) {
    const int fa = f.on_obj(a);
    if (fa < 0 || fa >= f.dst->object_count()) return fail("object image");
    if (f.on_mor(f.src->identity(a)) != f.dst->identity(fa)) {
      return fail("identity not preserved at " + f.src->object_name(a));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (MorId m : f.src->hom(a, b)) {
        const MorId fm = f.on_mor(m);
        if (f.dst->mor_src(fm) != f.on_obj(a) ||
            f.dst->mor_dst(fm) != f.on_obj(b)) {
          return fail("morphism image endpoints");
        }
        for (int c = 0; c < n; ++c) {
          for (MorId g : f.src->hom(b, c)) {
            if (f.on_mor(f.src->compose(g, m)) !=
                f.dst->compose(f.on_mor(g), fm)) {
              return fail("composition not preserved");
            }
          }
        }
      }
    }
  }
  return true;
}

CatFunctor identity_functor(const CatPtr& c) {
  return CatFunctor{c, c, [](int o) { return o; }, [](MorId m) { return m; }};
}

CatPtr discretisation(const CatPtr& c) {
  std::vector<std::string> names;
  for (int i = 0; i < c->object_count(); ++i) names.push_back(c->object_name(i));
  return FinCategory::discrete(std::move(names));
}

CatFunctor discretisation_embedding(const CatPtr& c) {
  CatPtr d = discretisation(c);
  return CatFunctor{d, c, [](int o) { return o; },
                    [c, d](MorId m) { return c->identity(d->mor_src(m)); }};
}

}  // namespace irk
