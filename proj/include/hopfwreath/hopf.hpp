#ifndef HOPFWREATH_HOPF_HPP
#define HOPFWREATH_HOPF_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfwreath/linalg.hpp"
#include "hopfwreath/lincomb.hpp"
#include "hopfwreath/linmap.hpp"

namespace hopfwreath {

/// Structure descriptor for a Hopf algebra over an enumerated basis.
///
/// All maps are stored на basis symbols and extend linearly. A positive
/// `cap` marks a degree-truncated object: products are defined exactly
/// when the degrees sum to at most `cap`, and every identity is asserted
/// on that window only. `cap == 0` means ungraded (every degree is 0).
///
/// `product` may be empty for plain coalgebras, `antipode` for crossed
/// products. Tables and closures are immutable after construction, so
/// every operation here is safe to evaluate from parallel sweeps.
struct HopfOps {
  std::string name;
  std::vector<Sym> basis;
  int cap = 0;
  std::function<int(const Sym&)> degree;
  std::function<LinComb(const Sym&, const Sym&)> product;
  LinComb unit;
  std::function<LinComb(const Sym&)> coproduct;
  std::function<Scalar(const Sym&)> counit;
  std::function<LinComb(const Sym&)> antipode;

  bool has_product() const { return static_cast<bool>(product); }
  bool has_antipode() const { return static_cast<bool>(antipode); }

  int deg(const Sym& s) const { return degree ? degree(s) : 0; }
  int deg(const LinComb& x) const {
    int d = 0;
    for (const auto& [s, c] : x) d = std::max(d, deg(s));
    return d;
  }

  LinComb mul(const LinComb& a, const LinComb& b) const {
    LinComb r;
    for (const auto& [sa, ca] : a)
      for (const auto& [sb, cb] : b) r += (ca * cb) * product(sa, sb);
    return r;
  }

  LinComb delta(const Sym& s) const { return coproduct(s); }
  LinComb delta(const LinComb& x) const {
    LinComb r;
    for (const auto& [s, c] : x) r += c * coproduct(s);
    return r;
  }

  Scalar eps(const LinComb& x) const {
    Scalar r(0);
    for (const auto& [s, c] : x) r += c * counit(s);
    return r;
  }

  LinComb S(const LinComb& x) const {
    LinComb r;
    for (const auto& [s, c] : x) r += c * antipode(s);
    return r;
  }
};

using HopfPtr = std::shared_ptr<const HopfOps>;

/// A linear map between Hopf algebras together with its claimed role;
/// the structure-compatibility claims are checkable, not assumed.
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  LinMap map;
};

struct AxiomCheck {
  std::string axiom;
  std::vector<std::pair<Sym, Sym>> violations;
  bool pass() const { return violations.empty(); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
  const AxiomCheck* find(const std::string& axiom) const {
    for (const auto& c : checks)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }
};

/// Iterated coproduct with the requested number of legs (>= 2), returned
/// over flat leg tuples. Asserts every leg stays within the degree cap.
LinComb sweedler_expand(const HopfOps& h, const LinComb& x, int legs);

/// Componentwise product on n-leg tensors over `h`.
LinComb tensor_product(const HopfOps& h, const LinComb& a, const LinComb& b);

/// Convolution f * g = m_D (f ⊗ g) Δ_C on maps from C's basis into D.
LinMap convolve(const LinMap& f, const LinMap& g, const HopfOps& cdom, const HopfOps& dcod);

/// The convolution identity element, unit_D ∘ counit_C.
LinMap unit_counit_map(const HopfOps& cdom, const HopfOps& dcod);

/// Left convolution inverse of f, solved exactly; two-sidedness is
/// verified (cocommutative setting). Throws NotInvertible.
LinMap convolution_inverse(const LinMap& f, const HopfOps& cdom, const HopfOps& dcod);

/// Exhaustive axiom verification on the degree window: coassociativity,
/// counit law, bialgebra compatibility, antipode law, cocommutativity.
/// `window < 0` means the full cap. Violating elements/pairs are listed.
AxiomReport check_axioms(const HopfOps& h, int window = -1);

/// Associativity and unit law of the product on the window (separate
/// from check_axioms; crossed products need it without an antipode).
AxiomReport check_algebra(const HopfOps& h, int window = -1);

/// Exact basis of {e : Σ e1 ⊗ π(e2) = e ⊗ 1}.
std::vector<LinComb> hopf_kernel(const HopfMorphism& pi);

/// All group-like elements (Δx = x⊗x, ε(x) = 1). Complete for group
/// algebras and for connected graded Hopf algebras; in general the
/// search covers candidates supported on at most two basis symbols.
std::vector<LinComb> group_likes(const HopfOps& h);

/// Exact basis of the primitive subspace {x : Δx = x⊗1 + 1⊗x}.
std::vector<LinComb> primitives(const HopfOps& h);

/// Structure-compatibility report for a claimed Hopf morphism: product,
/// unit, coproduct and counit compatibility on the window.
AxiomReport check_hopf_morphism(const HopfMorphism& m, int window = -1);

/// Tensor product Hopf algebra H1 ⊗ H2 with componentwise structure.
HopfPtr tensor_hopf(HopfPtr h1, HopfPtr h2);

/// sqrt of a nonnegative rational if it is rational, else nullopt.
std::optional<Scalar> sqrt_rational(const Scalar& s);

} // namespace hopfwreath

#endif
