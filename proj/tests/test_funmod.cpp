#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braq/funmap.hpp"
#include "braq/random.hpp"

using namespace braq;

namespace {

constexpr unsigned kN = 32;

const std::vector<std::string> kA{"a0", "a1", "a2"};
const std::vector<std::string> kB{"b0", "b1", "b2"};
const std::vector<std::string> kC{"c0", "c1", "c2"};

FunMap random_map(Rng& rng, const std::vector<std::string>& A,
                  const std::vector<std::string>& B) {
  FunMap f(std::vector<std::vector<std::string>>{A, B});
  for (const auto& a : A)
    for (const auto& b : B)
      if (rng.coin()) f.set({a, b}, random_qelement(rng, kN));
  return f;
}

// Identity-profile table on B x B: unit_c on the slot objects where b = b'.
FunMap identity_table(const std::vector<std::string>& B,
                      const std::set<std::size_t>& objects) {
  FunMap g(std::vector<std::vector<std::string>>{B, B});
  for (const auto& b : B) g.set({b, b}, q_compose_identity(objects, kN));
  return g;
}

}  // namespace

TEST_CASE("FunMap basics") {
  FunMap f = FunMap::on(kA);
  CHECK(f.arity() == 1);
  CHECK(f.at({"a0"}).is_zero());
  f.set({"a0"}, q_from_morphism(BrauerMorphism::identity(1), kN));
  CHECK_FALSE(f.at({"a0"}).is_zero());
  f.set({"a0"}, QElement::zero());
  CHECK(f.entries().empty());  // zero erases, canonical form

  CHECK_THROWS_AS(f.at({"nope"}), std::invalid_argument);
  CHECK_THROWS_AS(f.at({"a0", "a1"}), std::invalid_argument);
  CHECK_THROWS_AS(
      FunMap(std::vector<std::vector<std::string>>{{"x", "x"}}),
      std::invalid_argument);
}

TEST_CASE("tensor_alpha on characteristic functions") {
  QElement one = q_compose_identity({1}, kN);
  FunMap f = FunMap::on(kA);
  f.set({"a1"}, one);
  FunMap g = FunMap::on(kB);
  g.set({"b2"}, one);
  FunMap prod = tensor_alpha(f, g, QProduct::Compose);
  CHECK(prod.arity() == 2);
  CHECK(prod.entries().size() == 1);
  CHECK(prod.at({"a1", "b2"}) == one);
}

TEST_CASE("tensor_alpha bilinearity") {
  Rng rng(41);
  for (int it = 0; it < 25; ++it) {
    FunMap f = random_map(rng, kA, kB);
    FunMap f2 = random_map(rng, kA, kB);
    FunMap g = random_map(rng, kB, kC);
    for (QProduct p : {QProduct::Compose, QProduct::Monoidal}) {
      // (f + f') (x) g = f (x) g + f' (x) g, pointwise.
      FunMap sum(f.factors());
      for (const auto& key : f.all_keys())
        sum.set(key, q_add(f.at(key), f2.at(key)));
      FunMap lhs = tensor_alpha(sum, g, p);
      FunMap rhs1 = tensor_alpha(f, g, p);
      FunMap rhs2 = tensor_alpha(f2, g, p);
      for (const auto& key : lhs.all_keys())
        CHECK(lhs.at(key) == q_add(rhs1.at(key), rhs2.at(key)));
    }
  }
}

TEST_CASE("monoidal tensor with a singleton recovers the map") {
  Rng rng(43);
  FunMap f = random_map(rng, kA, kB);
  FunMap point = FunMap::on({"pt"});
  point.set({"pt"}, q_monoidal_identity(kN));
  FunMap prod = tensor_alpha(f, point, QProduct::Monoidal);
  for (const auto& a : kA)
    for (const auto& b : kB) CHECK(prod.at({a, b, "pt"}) == f.at({a, b}));
}

TEST_CASE("beta round-trip") {
  // Singleton support.
  Rng seed3(3);
  FunMap h(std::vector<std::vector<std::string>>{kA, kB});
  h.set({"a0", "b1"}, random_qelement(seed3, kN));
  CHECK(tensor_beta_roundtrip(h).pass);

  // Zero map.
  FunMap zero(std::vector<std::vector<std::string>>{kA, kB});
  CHECK(tensor_beta_roundtrip(zero).pass);

  Rng rng(47);
  for (int it = 0; it < 40; ++it)
    CHECK(tensor_beta_roundtrip(random_map(rng, kA, kB)).pass);
}

TEST_CASE("contract against identity tables") {
  Rng rng(53);
  // Values with a fixed codomain object so the identity table matches.
  FunMap f(std::vector<std::vector<std::string>>{kA, kB});
  for (const auto& a : kA)
    for (const auto& b : kB)
      if (rng.coin())
        f.set({a, b}, q_from_morphism(random_morphism(rng, 2, 2, 2), kN));
  FunMap id_table = identity_table(kB, {2});
  FunMap propagated = contract(f, id_table);
  for (const auto& a : kA)
    for (const auto& b : kB) CHECK(propagated.at({a, b}) == f.at({a, b}));
}

TEST_CASE("contract associativity") {
  Rng rng(59);
  const std::vector<std::string> kD{"d0", "d1", "d2"};
  for (int it = 0; it < 40; ++it) {
    FunMap f = random_map(rng, kA, kB);
    FunMap g = random_map(rng, kB, kC);
    FunMap h = random_map(rng, kC, kD);
    CHECK(contract(contract(f, g), h) == contract(f, contract(g, h)));
  }
  FunMap f = random_map(rng, kA, kB);
  FunMap mismatched = random_map(rng, kA, kC);
  CHECK_THROWS_AS(contract(f, mismatched), std::invalid_argument);
}

TEST_CASE("contract over an empty middle set") {
  FunMap f(std::vector<std::vector<std::string>>{kA, {}});
  FunMap g(std::vector<std::vector<std::string>>{{}, kC});
  FunMap out = contract(f, g);
  for (const auto& key : out.all_keys()) CHECK(out.at(key).is_zero());
  CHECK(out.entries().empty());
}

TEST_CASE("middle linearity of the contraction") {
  Rng rng(61);
  for (int it = 0; it < 40; ++it) {
    FunMap f = random_map(rng, kA, kB);
    FunMap g = random_map(rng, kB, kC);
    QElement s = random_qelement(rng, kN);
    CHECK(contract(scale_right(f, s), g) == contract(f, scale_left(s, g)));
  }
}

TEST_CASE("Fubini for nested big sums") {
  Rng rng(67);
  for (int it = 0; it < 25; ++it) {
    // A 3x3 family; sum rows-then-columns versus columns-then-rows.
    std::vector<std::vector<QElement>> grid(3, std::vector<QElement>(3));
    for (auto& row : grid)
      for (auto& cell : row) cell = random_qelement(rng, kN);
    std::vector<QElement> row_sums, col_sums;
    for (int r = 0; r < 3; ++r) row_sums.push_back(q_big_sum(grid[r]));
    for (int c = 0; c < 3; ++c)
      col_sums.push_back(q_big_sum({grid[0][c], grid[1][c], grid[2][c]}));
    CHECK(q_big_sum(row_sums) == q_big_sum(col_sums));
  }
}

TEST_CASE("four-factor compose tensor") {
  // The two-state form of the product table: the four-factor map takes
  // zeta (x)_c zeta' to the entrywise Q^c product at (a, b, a', b').
  Rng rng(71);
  for (int it = 0; it < 20; ++it) {
    FunMap z1 = random_map(rng, kA, kB);
    FunMap z2 = random_map(rng, kC, {"e0", "e1"});
    FunMap four = tensor_alpha(z1, z2, QProduct::Compose);
    CHECK(four.arity() == 4);
    for (const auto& key : four.all_keys())
      CHECK(four.at(key) ==
            q_compose(z1.at({key[0], key[1]}), z2.at({key[2], key[3]})));
  }
}
