#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfwreath/linalg.hpp"
#include "hopfwreath/lincomb.hpp"
#include "hopfwreath/sweep.hpp"

using namespace hopfwreath;

namespace {
const Sym X = Sym::atom("x");
const Sym Y = Sym::atom("y");
const Sym Z = Sym::atom("z");

LinComb random_comb(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), den(1, 3);
  LinComb r;
  for (const Sym& s : {X, Y, Z}) r.add(s, scalar(coeff(rng), den(rng)));
  return r;
}
} // namespace

TEST_CASE("scalar parsing and canonical form") {
  CHECK(scalar_from_string("2/4") == scalar(1, 2));
  CHECK(scalar_from_string("-6/4") == scalar(-3, 2));
  CHECK(scalar_from_string("5") == scalar(5));
  CHECK(scalar_to_string(scalar(-3, 2)) == "-3/2");
  CHECK_THROWS(scalar_from_string("1/0"));
  CHECK_THROWS(scalar_from_string("zz"));
}

TEST_CASE("symbols order and render") {
  CHECK(Sym::atom("a") < Sym::atom("b"));
  CHECK(Sym::atom("a") < Sym::pair(X, Y));
  CHECK(Sym::pair(X, Y).str() == "(x,y)");
  CHECK(Sym::pair(X, Y) == Sym::tuple({X, Y}));
  CHECK(Sym::tuple({X}) < Sym::tuple({X, Y}));
}

TEST_CASE("lincomb_combine basics") {
  const LinComb x(X);
  CHECK(lincomb_combine(x, 1, x) == LinComb(X, 2));
  CHECK(lincomb_combine(x, -1, x).is_zero());
  LinComb a(X, 2);
  a.add(Y, 1);
  CHECK(lincomb_combine(a, 3, LinComb(Y)) == [] {
    LinComb e(X, 2);
    e.add(Y, 4);
    return e;
  }());
}

TEST_CASE("lincomb additive laws on random inputs") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    const LinComb a = random_comb(rng), b = random_comb(rng), c = random_comb(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + LinComb() == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("tensor bilinearity") {
  CHECK(tensor(LinComb(X), LinComb()).is_zero());
  CHECK(tensor(LinComb(Sym::atom("a")), LinComb(Sym::atom("b"), 2)) ==
        LinComb(Sym::pair(Sym::atom("a"), Sym::atom("b")), 2));
  const LinComb ab = LinComb(Sym::atom("a")) + LinComb(Sym::atom("b"));
  CHECK(tensor(ab, LinComb(Sym::atom("c"))) ==
        tensor(LinComb(Sym::atom("a")), LinComb(Sym::atom("c"))) +
            tensor(LinComb(Sym::atom("b")), LinComb(Sym::atom("c"))));

  std::mt19937 rng(999);
  for (int it = 0; it < 100; ++it) {
    const LinComb a = random_comb(rng), b = random_comb(rng);
    const LinComb t = tensor(a, b);
    for (const Sym& i : {X, Y, Z})
      for (const Sym& j : {X, Y, Z})
        CHECK(t.coeff(Sym::pair(i, j)) == a.coeff(i) * b.coeff(j));
  }
}

TEST_CASE("kernel of the zero and identity maps") {
  const std::vector<Sym> dom = {X, Y, Z};
  LinMap zero = LinMap::from_function(dom, [](const Sym&) { return LinComb(); });
  CHECK(kernel_basis(zero).size() == 3);
  LinMap id = LinMap::from_function(dom, [](const Sym& s) { return LinComb(s); });
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("kernel of a 2x2 map, hand-reduced") {
  // M(x)=y, M(y)=y has kernel spanned by x - y
  LinMap m({X, Y}, {{X, LinComb(Y)}, {Y, LinComb(Y)}});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  LinComb expect(X);
  expect.add(Y, -1);
  CHECK(k[0] == expect);
}

TEST_CASE("kernel vectors really vanish and are independent") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int it = 0; it < 50; ++it) {
    const std::vector<Sym> dom = {X, Y, Z};
    LinMap m = LinMap::from_function(dom, [&](const Sym&) {
      LinComb r;
      r.add(X, coeff(rng));
      r.add(Y, coeff(rng));
      return r;
    });
    const auto k = kernel_basis(m);
    for (const auto& v : k) CHECK(m.apply(v).is_zero());
    CHECK(rank(k) == k.size());
  }
}

TEST_CASE("solve") {
  const std::vector<Sym> dom = {X, Y};
  LinMap id = LinMap::from_function(dom, [](const Sym& s) { return LinComb(s); });
  LinComb y(Y, 3);
  CHECK(solve(id, y) == y);

  LinMap zero = LinMap::from_function(dom, [](const Sym&) { return LinComb(); });
  CHECK_THROWS_AS(solve(zero, LinComb(Y)), NoSolution);

  // M(x) = 2y: the preimage of y is x/2
  LinMap twice({X}, {{X, LinComb(Y, 2)}});
  CHECK(solve(twice, LinComb(Y)) == LinComb(X, scalar(1, 2)));

  // solve then apply reproduces the target
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int it = 0; it < 50; ++it) {
    LinMap m = LinMap::from_function({X, Y, Z}, [&](const Sym&) {
      LinComb r;
      r.add(X, coeff(rng));
      r.add(Y, coeff(rng));
      r.add(Z, coeff(rng));
      return r;
    });
    const LinComb target = m.apply(random_comb(rng));
    CHECK(m.apply(solve(m, target)) == target);
  }
}

TEST_CASE("coordinates") {
  LinComb b1(X);
  b1.add(Y, 1);
  LinComb b2(Y);
  const auto c = coordinates({b1, b2}, LinComb(X, 2));
  CHECK(c[0] == 2);
  CHECK(c[1] == -2);
  CHECK_THROWS_AS(coordinates({b1}, LinComb(Z)), NoSolution);
}

TEST_CASE("sweep collect: serial and parallel agree") {
  auto body = [](std::size_t i) {
    std::vector<int> v;
    if (i % 3 == 0) v.push_back(static_cast<int>(i));
    return v;
  };
  sweep::mode() = sweep::Mode::serial;
  const auto a = sweep::collect<int>(1000, body);
  sweep::mode() = sweep::Mode::parallel;
  const auto b = sweep::collect<int>(1000, body);
  CHECK(a == b);
}
