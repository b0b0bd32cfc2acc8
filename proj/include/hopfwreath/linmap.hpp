#ifndef HOPFWREATH_LINMAP_HPP
#define HOPFWREATH_LINMAP_HPP

#include <functional>
#include <map>
#include <vector>

#include "hopfwreath/errors.hpp"
#include "hopfwreath/lincomb.hpp"

namespace hopfwreath {

/// Linear map given by its values on an ordered domain basis,
/// extended linearly.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::vector<Sym> domain, std::map<Sym, LinComb> action)
      : domain_(std::move(domain)), action_(std::move(action)) {
    for (const auto& s : domain_)
      if (!action_.count(s))
        throw ValidationError("LinMap undefined on domain symbol " + s.str());
  }

  static LinMap from_function(std::vector<Sym> domain,
                              const std::function<LinComb(const Sym&)>& f) {
    std::map<Sym, LinComb> action;
    for (const auto& s : domain) action.emplace(s, f(s));
    return LinMap(std::move(domain), std::move(action));
  }

  const std::vector<Sym>& domain() const { return domain_; }

  const LinComb& apply(const Sym& s) const {
    auto it = action_.find(s);
    if (it == action_.end())
      throw ValidationError("LinMap applied outside its domain: " + s.str());
    return it->second;
  }

  LinComb apply(const LinComb& x) const {
    LinComb r;
    for (const auto& [s, c] : x) r += c * apply(s);
    return r;
  }

 private:
  std::vector<Sym> domain_;
  std::map<Sym, LinComb> action_;
};

} // namespace hopfwreath

#endif
