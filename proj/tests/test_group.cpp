#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hopfwreath/group.hpp"

using namespace hopfwreath;

TEST_CASE("builtin groups validate and have the right orders") {
  const std::map<std::string, int> orders = {{"C2", 2},    {"C3", 3}, {"C4", 4}, {"C2xC2", 4},
                                             {"S3", 6},    {"D4", 8}, {"Q8", 8}};
  for (const auto& [name, n] : orders) {
    const FiniteGroup g = builtin_group(name);
    CHECK(g.size() == n);
    CHECK(g.elements[g.identity] == "1");
  }
  CHECK(builtin_group("Q8").order_of(builtin_group("Q8").index_of("i")) == 4);
  CHECK_THROWS_AS(builtin_group("C5"), ParseError);
}

TEST_CASE("bad tables are rejected") {
  // non-associative magma on 2 elements: a*a=a with a not idempotent identity
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {"1", "a"}, {{0, 1}, {1, 1}}),
                  ValidationError);
}

TEST_CASE("wreath product C2 wr C2 is dihedral of order 8") {
  const WreathGroup w = wreath_group(builtin_group("C2"), builtin_group("C2"));
  CHECK(w.group.size() == 8);
  CHECK(find_group_isomorphism(w.group, builtin_group("D4")).has_value());
  CHECK(!find_group_isomorphism(w.group, builtin_group("Q8")).has_value());
}

TEST_CASE("wreath product with trivial base or top collapses") {
  const FiniteGroup triv = FiniteGroup::from_table("1", {"1"}, {{0}});
  const WreathGroup wq = wreath_group(triv, builtin_group("C3"));
  CHECK(wq.group.size() == 3);
  CHECK(find_group_isomorphism(wq.group, builtin_group("C3")).has_value());

  const WreathGroup wa = wreath_group(builtin_group("C3"), triv);
  CHECK(wa.group.size() == 3);
  CHECK(find_group_isomorphism(wa.group, builtin_group("C3")).has_value());
}

TEST_CASE("wreath orders with larger tops") {
  CHECK(wreath_group(builtin_group("C2"), builtin_group("C3")).group.size() == 24);
  CHECK(wreath_group(builtin_group("C3"), builtin_group("C2")).group.size() == 18);
}

TEST_CASE("builtin extensions validate") {
  for (const auto& name : builtin_group_extension_names()) {
    const GroupExtension ext = builtin_group_extension(name);
    CHECK(ext.total.size() == ext.kernel.size() * ext.quotient.size());
  }
}

TEST_CASE("section laws are enforced") {
  FiniteGroup e = builtin_group("C4"), a = builtin_group("C2"), q = builtin_group("C2");
  // pi(section(q)) != q
  CHECK_THROWS_AS(GroupExtension::make(e, a, q, {0, 2}, {0, 1, 0, 1}, {0, 2}),
                  SectionInvalid);
  // section(1) != 1
  CHECK_THROWS_AS(GroupExtension::make(e, a, q, {0, 2}, {0, 1, 0, 1}, {2, 1}),
                  SectionInvalid);
}

TEST_CASE("kk embedding of C4 over C2") {
  const GroupExtension ext = builtin_group_extension("C4/C2");
  const GroupEmbedding emb = kk_embed_group(ext);
  // image is a cyclic subgroup of order 4 in C2 wr C2
  std::set<int> image(emb.image_indices.begin(), emb.image_indices.end());
  CHECK(image.size() == 4);
  const int gen = emb.image_indices[1]; // image of g
  CHECK(emb.wreath.group.order_of(gen) == 4);
  // rho after phi is pi
  for (int x = 0; x < ext.total.size(); ++x)
    CHECK(emb.wreath.proj_q(emb.image_indices[x]) == ext.pi[x]);
}

TEST_CASE("kk embedding of a split extension has constant fibers") {
  // A x Q with section q -> (1,q): phi(a,1) is the constant function a
  FiniteGroup a = builtin_group("C2"), q = builtin_group("C3");
  std::vector<std::string> elems;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) elems.push_back("(" + a.elements[i] + "," + q.elements[j] + ")");
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      mul[i][j] = a.op(i / 3, j / 3) * 3 + q.op(i % 3, j % 3);
  FiniteGroup e = FiniteGroup::from_table("C2xC3", elems, mul);
  const GroupExtension ext = GroupExtension::make(
      e, a, q, {0, 3}, {0, 1, 2, 0, 1, 2}, {0, 1, 2});
  const GroupEmbedding emb = kk_embed_group(ext);
  // phi(a,1) = element index 3: f should be constantly a-index 1
  const auto img = emb.image[3];
  CHECK(img.q == 0);
  for (int x = 0; x < 3; ++x) CHECK(img.f[x] == 1);
}

TEST_CASE("kk embedding with trivial kernel is (trivial f, pi)") {
  FiniteGroup triv = FiniteGroup::from_table("1", {"1"}, {{0}});
  FiniteGroup q = builtin_group("C3");
  const GroupExtension ext = GroupExtension::make(q, triv, q, {0}, {0, 1, 2}, {0, 1, 2});
  const GroupEmbedding emb = kk_embed_group(ext);
  for (int x = 0; x < 3; ++x) {
    CHECK(emb.image[x].q == x);
    for (int v : emb.image[x].f) CHECK(v == 0);
  }
}

TEST_CASE("round trip: recover the extension from the embedded image") {
  for (const auto& name : builtin_group_extension_names()) {
    INFO(name);
    const GroupExtension ext = builtin_group_extension(name);
    const GroupEmbedding emb = kk_embed_group(ext);
    const GroupExtension back =
        recover_extension_from_subgroup(emb.wreath, emb.image_indices);
    CHECK(extensions_isomorphic(ext, back));
  }
}

TEST_CASE("recover rejects the full wreath product and the trivial subgroup") {
  const WreathGroup w = wreath_group(builtin_group("C2"), builtin_group("C2"));
  std::vector<int> all(w.group.size());
  for (int i = 0; i < w.group.size(); ++i) all[i] = i;
  CHECK_THROWS_AS(recover_extension_from_subgroup(w, all), KernelMismatch);
  CHECK_THROWS_AS(recover_extension_from_subgroup(w, {w.group.identity}), NotSurjective);
}

TEST_CASE("conjugation search") {
  const WreathGroup w = wreath_group(builtin_group("C2"), builtin_group("C2"));
  const GroupExtension ext = builtin_group_extension("C4/C2");
  const GroupEmbedding emb = kk_embed_group(ext);
  CHECK(conjugating_element(w, emb.image_indices, emb.image_indices).has_value());
}

TEST_CASE("measuring coalgebra dimensions |Y|^|X|") {
  CHECK(measuring_group_iso({"x"}, {"p", "q", "r"}).coalgebra->basis.size() == 3);
  CHECK(measuring_group_iso({"x", "y"}, {"p", "q", "r"}).coalgebra->basis.size() == 9);
  CHECK(measuring_group_iso({"x", "y", "z"}, {"p", "q"}).coalgebra->basis.size() == 8);
}

TEST_CASE("measuring coalgebra evaluation table") {
  const auto m = measuring_group_iso({"x", "y"}, {"p", "q"});
  REQUIRE(m.functions.size() == 4);
  // exhaustive: u_f @ x = f(x)
  for (std::size_t i = 0; i < m.functions.size(); ++i)
    for (int x = 0; x < 2; ++x) CHECK(m.eval(static_cast<int>(i), x) == m.functions[i][x]);
  // all functions distinct
  std::set<std::vector<int>> distinct(m.functions.begin(), m.functions.end());
  CHECK(distinct.size() == 4);
  // group-like coproduct
  const auto& h = *m.coalgebra;
  for (const auto& b : h.basis) {
    CHECK(h.coproduct(b) == LinComb(Sym::pair(b, b)));
    CHECK(h.counit(b) == 1);
  }
}

TEST_CASE("extension isomorphism distinguishes C4 from C2xC2") {
  CHECK(!extensions_isomorphic(builtin_group_extension("C4/C2"),
                               builtin_group_extension("C2xC2/C2")));
}
