#ifndef HOPFWREATH_LINCOMB_HPP
#define HOPFWREATH_LINCOMB_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "hopfwreath/scalar.hpp"
#include "hopfwreath/symbol.hpp"

namespace hopfwreath {

/// Finitely supported rational combination of basis symbols.
/// Invariant: no stored coefficient is zero, so operator== is semantic
/// equality. Terms iterate in symbol order.
class LinComb {
 public:
  using Terms = std::map<Sym, Scalar>;

  LinComb() = default;
  LinComb(const Sym& s, Scalar c) { add(s, std::move(c)); }
  explicit LinComb(const Sym& s) { add(s, 1); }

  static LinComb zero() { return LinComb(); }

  void add(const Sym& s, const Scalar& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(s, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= k;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& k, LinComb a) { return a *= k; }
  friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  Scalar coeff(const Sym& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += scalar_to_string(c) + "*";
      out += s.str();
    }
    return out;
  }

 private:
  Terms terms_;
};

/// a + s*b with zeros pruned.
inline LinComb lincomb_combine(const LinComb& a, const Scalar& s, const LinComb& b) {
  LinComb r = a;
  for (const auto& [sym, c] : b) r.add(sym, s * c);
  return r;
}

/// Bilinear tensor: (x)(y) -> pair symbol (x,y) with coefficient product.
inline LinComb tensor(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b) r.add(Sym::pair(sa, sb), ca * cb);
  return r;
}

} // namespace hopfwreath

#endif
