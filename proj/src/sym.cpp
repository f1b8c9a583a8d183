#include "irk/sym.hpp"

#include <sstream>

namespace irk {

namespace {
const std::shared_ptr<const Sym> kStar;  // unused placeholder
}

Sym::Sym() : node_(nullptr) {
  static const auto star = [] {
    auto n = std::make_shared<Node>();
    n->tag = Tag::Atom;
    n->atom = "*";
    return std::shared_ptr<const Node>(n);
  }();
  node_ = star;
}

Sym Sym::num(std::int64_t v) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Num;
  n->num = v;
  return Sym(std::move(n));
}

Sym Sym::atom(std::string s) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::Atom;
  n->atom = std::move(s);
  return Sym(std::move(n));
}

Sym Sym::list(std::vector<Sym> items) {
  auto n = std::make_shared<Node>();
  n->tag = Tag::List;
  n->items = std::move(items);
  return Sym(std::move(n));
}

bool Sym::is_num() const { return node_->tag == Tag::Num; }
bool Sym::is_atom() const { return node_->tag == Tag::Atom; }
bool Sym::is_list() const { return node_->tag == Tag::List; }

std::int64_t Sym::num_value() const { return node_->num; }
const std::string& Sym::atom_value() const { return node_->atom; }
const std::vector<Sym>& Sym::items() const { return node_->items; }

int Sym::compare(const Sym& other) const {
  if (node_ == other.node_) return 0;
  const int ta = static_cast<int>(node_->tag);
  const int tb = static_cast<int>(other.node_->tag);
  if (ta != tb) return ta < tb ? -1 : 1;
  switch (node_->tag) {
    case Tag::Num:
      if (node_->num != other.node_->num) {
        return node_->num < other.node_->num ? -1 : 1;
      }
      return 0;
    case Tag::Atom: {
      const int c = node_->atom.compare(other.node_->atom);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Tag::List: {
      const auto& a = node_->items;
      const auto& b = other.node_->items;
      const std::size_t n = a.size() < b.size() ? a.size() : b.size();
      for (std::size_t i = 0; i < n; ++i) {
        const int c = a[i].compare(b[i]);
        if (c != 0) return c;
      }
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

std::size_t Sym::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(node_->tag));
  switch (node_->tag) {
    case Tag::Num:
      mix(static_cast<std::size_t>(node_->num));
      break;
    case Tag::Atom:
      mix(std::hash<std::string>{}(node_->atom));
      break;
    case Tag::List:
      for (const auto& it : node_->items) mix(it.hash());
      break;
  }
  return h;
}

std::string Sym::str() const {
  std::ostringstream os;
  switch (node_->tag) {
    case Tag::Num:
      os << node_->num;
      break;
    case Tag::Atom:
      os << node_->atom;
      break;
    case Tag::List: {
      os << "(";
      bool first = true;
      for (const auto& it : node_->items) {
        if (!first) os << " ";
        first = false;
        os << it.str();
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace irk
