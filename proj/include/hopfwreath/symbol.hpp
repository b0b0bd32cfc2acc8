#ifndef HOPFWREATH_SYMBOL_HPP
#define HOPFWREATH_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hopfwreath {

/// Immutable basis symbol: either an atom (a label) or a tuple of symbols.
/// Tuples encode tensor legs, PBW monomials, function tables and smash pairs.
/// Equality and ordering are structural, hence stable across runs.
class Sym {
 public:
  Sym() : node_(empty_atom()) {}

  static Sym atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->name = std::move(name);
    n->hash = hash_atom(n->name);
    return Sym(std::move(n));
  }

  static Sym tuple(std::vector<Sym> parts) {
    auto n = std::make_shared<Node>();
    n->is_tuple = true;
    n->parts = std::move(parts);
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& p : n->parts) h = h * 0x100000001b3ull ^ p.hash();
    n->hash = h;
    return Sym(std::move(n));
  }

  static Sym pair(const Sym& a, const Sym& b) { return tuple({a, b}); }

  bool is_tuple() const { return node_->is_tuple; }
  bool is_atom() const { return !node_->is_tuple; }
  const std::string& name() const { return node_->name; }
  const std::vector<Sym>& parts() const { return node_->parts; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Sym& a, const Sym& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Sym& a, const Sym& b) { return !(a == b); }
  friend bool operator<(const Sym& a, const Sym& b) { return compare(a, b) < 0; }
  friend bool operator>(const Sym& a, const Sym& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Sym& a, const Sym& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Sym& a, const Sym& b) { return compare(a, b) >= 0; }

  /// Canonical rendering, e.g. "g2" or "(x,y,y)".
  std::string str() const {
    if (is_atom()) return node_->name;
    std::string out = "(";
    for (std::size_t i = 0; i < node_->parts.size(); ++i) {
      if (i) out += ',';
      out += node_->parts[i].str();
    }
    out += ')';
    return out;
  }

  /// Total structural order: atoms before tuples, atoms by name,
  /// tuples lexicographically.
  static int compare(const Sym& a, const Sym& b) {
    if (a.node_ == b.node_) return 0;
    if (a.is_atom() != b.is_atom()) return a.is_atom() ? -1 : 1;
    if (a.is_atom()) return a.node_->name.compare(b.node_->name);
    const auto& x = a.node_->parts;
    const auto& y = b.node_->parts;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i)
      if (int c = compare(x[i], y[i]); c != 0) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  }

 private:
  struct Node {
    bool is_tuple = false;
    std::string name;
    std::vector<Sym> parts;
    std::size_t hash = 0;
  };

  explicit Sym(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::size_t hash_atom(const std::string& s) {
    std::size_t h = 0xcbf29ce484222325ull;
    for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    return h;
  }

  static const std::shared_ptr<const Node>& empty_atom() {
    static const std::shared_ptr<const Node> n = [] {
      auto m = std::make_shared<Node>();
      m->hash = hash_atom("");
      return m;
    }();
    return n;
  }

  std::shared_ptr<const Node> node_;
};

} // namespace hopfwreath

template <>
struct std::hash<hopfwreath::Sym> {
  std::size_t operator()(const hopfwreath::Sym& s) const noexcept { return s.hash(); }
};

#endif
