#ifndef HOPFWREATH_GROUP_HPP
#define HOPFWREATH_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfwreath/hopf.hpp"

namespace hopfwreath {

/// Finite group presented by its full multiplication table. Construction
/// validates associativity on all triples plus identity and inverse laws.
struct FiniteGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> mul; // indices into elements
  int identity = -1;
  std::vector<int> inverse;

  static FiniteGroup from_table(std::string name, std::vector<std::string> elements,
                                std::vector<std::vector<int>> mul);

  int size() const { return static_cast<int>(elements.size()); }
  int op(int a, int b) const { return mul[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int index_of(const std::string& label) const;
  int order_of(int a) const;
};

/// Registry: C2, C3, C4, C2xC2, S3, D4, Q8.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// f is a total map Q-index -> A-index; q a Q-index.
struct WreathGroupElement {
  std::vector<int> f;
  int q = 0;
};

/// A wr Q with multiplication (f,q)(g,r) = (x -> f(x) g(xq), qr), kept
/// together with the encode/decode of its elements.
struct WreathGroup {
  FiniteGroup group;
  FiniteGroup base;    // A
  FiniteGroup top;     // Q
  int encode(const WreathGroupElement& e) const;
  WreathGroupElement decode(int idx) const;
  int proj_q(int idx) const { return decode(idx).q; }
  std::string label(const WreathGroupElement& e) const;
};

WreathGroup wreath_group(const FiniteGroup& a, const FiniteGroup& q);

/// Extension 1 -> A -> E -> Q -> 1 with a set-level section of pi.
/// Construction validates the homomorphism, exactness and section laws.
struct GroupExtension {
  FiniteGroup total;    // E
  FiniteGroup kernel;   // A
  FiniteGroup quotient; // Q
  std::vector<int> iota;    // A-index -> E-index
  std::vector<int> pi;      // E-index -> Q-index
  std::vector<int> section; // Q-index -> E-index

  static GroupExtension make(FiniteGroup total, FiniteGroup kernel, FiniteGroup quotient,
                             std::vector<int> iota, std::vector<int> pi,
                             std::vector<int> section);
};

/// Registry: C4/C2, C2xC2/C2, D4/C2 (kernel the center).
GroupExtension builtin_group_extension(const std::string& name);
std::vector<std::string> builtin_group_extension_names();

/// The graph of the classifying embedding of an extension into A wr Q.
struct GroupEmbedding {
  WreathGroup wreath;
  std::vector<WreathGroupElement> image; // indexed by E-element
  std::vector<int> image_indices;        // same, encoded in wreath.group
};

/// phi(e) = (q -> section(q) e section(q pi(e))^{-1} pulled back through
/// iota, pi(e)); verified injective and a homomorphism by exhaustion.
GroupEmbedding kk_embed_group(const GroupExtension& ext);

/// Rebuilds the extension classified by a subgroup of A wr Q that maps
/// onto Q and whose rho-kernel is a copy of A under evaluation at 1.
GroupExtension recover_extension_from_subgroup(const WreathGroup& w,
                                               const std::vector<int>& subgroup);

/// Group-like coalgebra on the function set Y^X with its evaluation
/// table: basis symbol u_f evaluates at x to f(x).
struct MeasuringCoalgebra {
  HopfPtr coalgebra;
  std::vector<std::string> x_labels, y_labels;
  std::vector<std::vector<int>> functions; // basis index -> (X-index -> Y-index)
  int eval(int basis_index, int x_index) const { return functions[basis_index][x_index]; }
};

MeasuringCoalgebra measuring_group_iso(const std::vector<std::string>& x,
                                       const std::vector<std::string>& y);

/// Group ring as a Hopf algebra: group-like coproduct, antipode g -> g^{-1}.
HopfPtr group_algebra(const FiniteGroup& g);

/// Backtracking search over generator images, pruned by element orders.
std::optional<std::vector<int>> find_group_isomorphism(const FiniteGroup& g,
                                                       const FiniteGroup& h);

/// Isomorphism of extensions: compatible triple (alpha, phi, omega).
bool extensions_isomorphic(const GroupExtension& e1, const GroupExtension& e2);

/// Exhaustive search for x with x E1 x^{-1} = E2 inside w.
std::optional<int> conjugating_element(const WreathGroup& w, const std::vector<int>& e1,
                                       const std::vector<int>& e2);

/// Closure check for an explicit element list.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

/// k-linearization of a map of groups (element index -> element index)
/// as a morphism between the group algebras.
HopfMorphism linearize_group_hom(HopfPtr src, HopfPtr dst, const FiniteGroup& s,
                                 const FiniteGroup& t, const std::vector<int>& images);

} // namespace hopfwreath

#endif
