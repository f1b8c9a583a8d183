#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace irk {

// Immutable symbolic value used for coproduct tags and family index
// elements: an integer atom, a string atom, or a list of values.  Equality
// and the total order are structural, so families built from the same
// summand data compare equal on the nose.
class Sym {
 public:
  Sym();  // the atom "*"

  static Sym num(std::int64_t v);
  static Sym atom(std::string s);
  static Sym list(std::vector<Sym> items);
  static Sym pair(Sym a, Sym b) { return list({std::move(a), std::move(b)}); }

  bool is_num() const;
  bool is_atom() const;
  bool is_list() const;

  std::int64_t num_value() const;
  const std::string& atom_value() const;
  const std::vector<Sym>& items() const;

  int compare(const Sym& other) const;  // -1 / 0 / +1
  bool operator==(const Sym& o) const { return compare(o) == 0; }
  bool operator!=(const Sym& o) const { return compare(o) != 0; }
  bool operator<(const Sym& o) const { return compare(o) < 0; }

  std::size_t hash() const;
  std::string str() const;

 private:
  enum class Tag { Num, Atom, List };
  struct Node {
    Tag tag;
    std::int64_t num = 0;
    std::string atom;
    std::vector<Sym> items;
  };
  explicit Sym(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SymHash {
  std::size_t operator()(const Sym& s) const { return s.hash(); }
};

}  // namespace irk
