#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "irk/common.hpp"

namespace irk {

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;
using MorId = std::int64_t;

// A computational finite category.  Objects are dense ids 0..n-1; morphisms
// are interned ids local to the category.  The finite-sets backend keeps
// hom-sets lazy: identities, composites and individual function tables are
// interned on demand, and full hom enumeration is only permitted while the
// hom-set stays under a hard cap.  This is what lets chain stages mention
// large objects (Fin 16, Fin 81, ...) without tabulating n^m functions.
class FinCategory : public std::enable_shared_from_this<FinCategory> {
 public:
  enum class Kind { Table, FinSet, Opposite, Core };

  // Explicit small category: hom[a][b] lists morphism ids, comp maps
  // (g, f) -> g.f.  Used by discrete() and by hand-built test categories.
  struct TableData {
    std::vector<std::string> object_names;
    std::vector<std::pair<int, int>> mor_ends;  // per morphism: (src, dst)
    std::vector<MorId> identities;              // per object
    std::map<std::pair<MorId, MorId>, MorId> comp;  // (g, f) -> g after f
  };

  static CatPtr discrete(std::vector<std::string> object_names);
  static CatPtr discrete(int n_objects);
  static CatPtr finset(int max_card);
  static CatPtr from_table(TableData data);

  CatPtr opposite() const;       // returns base when already an opposite
  CatPtr core_groupoid() const;  // returns self for discrete categories

  Kind kind() const { return kind_; }
  const CatPtr& base() const { return base_; }  // Opposite/Core wrappers
  int object_count() const;
  std::string object_name(int obj) const;
  std::string name() const { return name_; }

  int mor_src(MorId m) const;
  int mor_dst(MorId m) const;
  MorId identity(int obj) const;
  MorId compose(MorId g, MorId f) const;  // g after f; dst(f) must be src(g)
  bool is_identity(MorId m) const;
  std::optional<MorId> find_inverse(MorId m) const;

  long long hom_count(int a, int b) const;
  std::vector<MorId> hom(int a, int b) const;  // throws BudgetExceeded if huge

  // True when objects carry a canonical finite-set cardinality (finset and
  // its opposite/core wrappers).
  bool is_finset_like() const;
  int card(int obj) const;                       // finset-like only
  std::optional<int> object_of_card(int c) const;
  // Underlying Set function of a finset-like morphism, always read in the
  // base (Set) direction: table[i] in [0, dst_card) for i in [0, src_card).
  std::vector<int> set_function(MorId m) const;
  // Intern the Set function 'table' as a base-direction morphism a -> b.
  // For an opposite category this names the wrapped morphism b -> a.
  MorId intern_function(int a, int b, const std::vector<int>& table) const;

  // K-indexed products of objects/morphisms where the category supplies
  // them (finset: cartesian product; opposite finset: disjoint union).
  // Used by the exponentiation of uniform codes.
  std::optional<int> product_object(const std::vector<int>& objs) const;
  std::optional<MorId> product_morphism(const std::vector<MorId>& ms) const;

  // Checks unit and associativity laws by exhaustive sweep.  max_objects
  // restricts the sweep to the first that-many objects (the full category
  // when <= 0), which keeps the check viable on large hom sets.
  bool check_laws(std::string* failure = nullptr, int max_objects = 0) const;

  // Two categories present the same structure (same object count, hom
  // tables, identities and composition, under the identity object map).
  static bool structurally_equal(const CatPtr& a, const CatPtr& b);

 private:
  FinCategory() = default;

  struct FinSetMor {
    int src;
    int dst;
    std::vector<int> table;
  };

  Kind kind_ = Kind::Table;
  std::string name_;
  CatPtr base_;  // for Opposite / Core
  // Table backend
  TableData table_;
  // FinSet backend
  int max_card_ = -1;
  mutable std::mutex mu_;
  mutable std::vector<FinSetMor> fs_mors_;
  mutable std::map<std::tuple<int, int, std::vector<int>>, MorId> fs_index_;

  const FinCategory* finset_root() const;  // innermost FinSet, or nullptr
  MorId fs_intern(int a, int b, std::vector<int> table) const;
  const FinSetMor& fs_mor(MorId m) const;
};

// Functor data between finite categories, with a budgeted law check.
struct CatFunctor {
  CatPtr src;
  CatPtr dst;
  std::function<int(int)> on_obj;
  std::function<MorId(MorId)> on_mor;
};

// Exhaustively checks functor laws on objects/morphisms up to the budget.
// Returns false and fills *failure on the first violation.
bool check_cat_functor(const CatFunctor& f, const Budget& budget,
                       std::string* failure = nullptr);

CatFunctor identity_functor(const CatPtr& c);
// The canonical embedding of the discretisation |C| -> C.  The returned
// functor's src is discrete(|C| objects).
CatFunctor discretisation_embedding(const CatPtr& c);
// The discretisation |C| of a category (same objects, identities only).
CatPtr discretisation(const CatPtr& c);

}  // namespace irk
