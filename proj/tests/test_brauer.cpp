#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "braq/brauer.hpp"
#include "braq/random.hpp"

using namespace braq;

namespace {

// ---------------------------------------------------------------------------
// Test-side oracle for composition, independent of the production path
// walk: union-find over the overlay point set.

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct OverlayOracle {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // composite space
  std::size_t cycles = 0;
};

OverlayOracle overlay_oracle(const BrauerMorphism& g, const BrauerMorphism& f) {
  const std::size_t m = f.dom(), n = f.cod(), p = g.cod();
  // Nodes: f points [0, m+n), then g points offset by m+n.
  Dsu dsu(m + n + n + p);
  for (const auto& [a, b] : f.pairs()) dsu.unite(a, b);
  for (const auto& [a, b] : g.pairs()) dsu.unite(m + n + a, m + n + b);
  for (std::size_t j = 0; j < n; ++j) dsu.unite(m + j, m + n + j);

  // Boundary points by component.
  std::map<std::size_t, std::vector<std::size_t>> boundary;  // composite ids
  for (std::size_t i = 0; i < m; ++i) boundary[dsu.find(i)].push_back(i);
  for (std::size_t j = 0; j < p; ++j)
    boundary[dsu.find(m + n + n + j)].push_back(m + j);

  OverlayOracle out;
  for (const auto& [root, pts] : boundary) {
    REQUIRE(pts.size() == 2);
    out.pairs.emplace_back(pts[0], pts[1]);
  }
  // Components made of middle points only are the closed cycles.
  std::map<std::size_t, bool> seen;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t root = dsu.find(m + j);
    if (!boundary.count(root) && !seen[root]) {
      seen[root] = true;
      ++out.cycles;
    }
  }
  return out;
}

BrauerMorphism compose_oracle(const BrauerMorphism& g,
                              const BrauerMorphism& f) {
  OverlayOracle o = overlay_oracle(g, f);
  return BrauerMorphism::from_pairing(f.dom(), g.cod(), o.pairs,
                                      f.loops() + g.loops() + o.cycles);
}

unsigned long long odd_double_factorial(std::size_t k) {
  // (k-1)!! for even k; (-1)!! = 1.
  unsigned long long value = 1;
  for (std::size_t i = k; i > 1; i -= 2) value *= (i - 1);
  return value;
}

// Brute-force count of fixed-point-free involutions, independent of the
// enumerator: recursion on the smallest unmatched point.
unsigned long long involution_count(std::size_t k) {
  if (k == 0) return 1;
  if (k % 2 != 0) return 0;
  return (k - 1) * involution_count(k - 2);
}

const BrauerMorphism kB = BrauerMorphism::braiding(1, 1);
const BrauerMorphism kI1 = BrauerMorphism::unit(1);
const BrauerMorphism kE1 = BrauerMorphism::counit(1);

}  // namespace

TEST_CASE("identity") {
  BrauerMorphism empty = BrauerMorphism::identity(0);
  CHECK(empty.dom() == 0);
  CHECK(empty.cod() == 0);
  CHECK(empty.loops() == 0);

  BrauerMorphism id2 = BrauerMorphism::identity(2);
  CHECK(id2.partner(0) == 2);
  CHECK(id2.partner(1) == 3);

  for (const auto& f : enumerate_loop_free(2, 4))  // [2] -> [4]
    CHECK(compose(BrauerMorphism::identity(4), f) == f);
}

TEST_CASE("braiding") {
  CHECK(kB.partner(0) == 3);
  CHECK(kB.partner(1) == 2);
  CHECK(BrauerMorphism::braiding(3, 0) == BrauerMorphism::identity(3));
  CHECK(compose(kB, kB) == BrauerMorphism::identity(2));
  CHECK(compose(kB, kB).loops() == 0);
}

TEST_CASE("unit and counit") {
  CHECK(kI1.dom() == 0);
  CHECK(kI1.cod() == 2);
  CHECK(kI1.partner(0) == 1);
  CHECK_THROWS_AS(BrauerMorphism::unit(0), std::invalid_argument);
  CHECK_THROWS_AS(BrauerMorphism::counit(0), std::invalid_argument);

  BrauerMorphism lam = compose(kE1, kI1);
  CHECK(lam == BrauerMorphism::loop());

  // Zig-zag: (e1 (x) 1) o (1 (x) i1) = 1.
  BrauerMorphism left = tensor(BrauerMorphism::identity(1), kI1);
  BrauerMorphism right = tensor(kE1, BrauerMorphism::identity(1));
  CHECK(compose(right, left) == BrauerMorphism::identity(1));
}

TEST_CASE("loop") {
  BrauerMorphism lam = BrauerMorphism::loop();
  CHECK(tensor(lam, lam).loops() == 2);
  for (const auto& f : enumerate_loop_free(1, 3))
    CHECK(tensor(lam, f) == tensor(f, lam));
}

TEST_CASE("compose creates loops") {
  CHECK(compose(kE1, kI1).loops() == 1);
  // Nested e2 o i2: two closed cycles (cross-checked by the oracle).
  BrauerMorphism i2 = BrauerMorphism::unit(2);
  BrauerMorphism e2 = BrauerMorphism::counit(2);
  CHECK(compose_oracle(e2, i2).loops() == 2);
  CHECK(compose(e2, i2).loops() == 2);
  CHECK_THROWS_AS(compose(kI1, kB), std::invalid_argument);
}

TEST_CASE("compose agrees with the union-find oracle") {
  Rng rng(2024);
  for (int it = 0; it < 300; ++it) {
    std::size_t m = rng.uniform(0, 4);
    std::size_t n = rng.uniform(0, 4);
    std::size_t p = rng.uniform(0, 4);
    if ((m + n) % 2 != 0 || (n + p) % 2 != 0) continue;
    BrauerMorphism f = random_morphism(rng, m, n, 2);
    BrauerMorphism g = random_morphism(rng, n, p, 2);
    CHECK(compose(g, f) == compose_oracle(g, f));
  }
}

TEST_CASE("tensor") {
  CHECK(tensor(BrauerMorphism::identity(1), BrauerMorphism::identity(1)) ==
        BrauerMorphism::identity(2));
  for (const auto& f : enumerate_loop_free(3, 1))
    CHECK(tensor(f, BrauerMorphism::identity(0)) == f);
  // The two [3] -> [1] stackings of e1 and 1 differ.
  BrauerMorphism a = tensor(kE1, BrauerMorphism::identity(1));
  BrauerMorphism b = tensor(BrauerMorphism::identity(1), kE1);
  CHECK(a != b);
}

TEST_CASE("tensor strict associativity on the data") {
  Rng rng(99);
  for (int it = 0; it < 50; ++it) {
    BrauerMorphism f = random_morphism(rng, 1, 1, 1);
    BrauerMorphism g = random_morphism(rng, 2, 0, 1);
    BrauerMorphism h = random_morphism(rng, 0, 2, 1);
    CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
  }
}

TEST_CASE("strip_loops") {
  auto [lf, k] = strip_loops(BrauerMorphism::loop());
  CHECK(lf == BrauerMorphism::identity(0));
  CHECK(k == 1);

  auto [id2, k2] = strip_loops(BrauerMorphism::identity(2));
  CHECK(id2 == BrauerMorphism::identity(2));
  CHECK(k2 == 0);

  BrauerMorphism two =
      compose(BrauerMorphism::counit(2), BrauerMorphism::unit(2));
  auto [base, count] = strip_loops(two);
  CHECK(base == BrauerMorphism::identity(0));
  CHECK(count == 2);

  // tensor(loop^k, loop-free part) recovers the original.
  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    BrauerMorphism f = random_morphism(rng, 2, 2, 3);
    auto [part, loops] = strip_loops(f);
    BrauerMorphism rebuilt = part;
    for (std::size_t i = 0; i < loops; ++i)
      rebuilt = tensor(BrauerMorphism::loop(), rebuilt);
    CHECK(rebuilt == f);
  }
}

TEST_CASE("enumerate_loop_free") {
  auto m22 = enumerate_loop_free(2, 2);
  REQUIRE(m22.size() == 3);
  CHECK(m22[1] == BrauerMorphism::identity(2));  // (I1-O1)(I2-O2)
  CHECK(m22[2] == kB);
  CHECK(m22[0] == compose(kI1, kE1));

  CHECK(enumerate_loop_free(1, 1).size() == 1);
  CHECK(enumerate_loop_free(1, 2).empty());
  CHECK(enumerate_loop_free(3, 5).size() == 105);  // 7!!
  CHECK(involution_count(8) == odd_double_factorial(8));

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; m + n <= 8; ++n) {
      auto all = enumerate_loop_free(m, n);
      if ((m + n) % 2 != 0) {
        CHECK(all.empty());
        continue;
      }
      CHECK(all.size() == odd_double_factorial(m + n));
      CHECK(all.size() == involution_count(m + n));
      for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);  // deterministic strict order
    }
}

TEST_CASE("composition associativity over enumerations") {
  for (const auto& f : enumerate_loop_free(2, 2))
    for (const auto& g : enumerate_loop_free(2, 2))
      for (const auto& h : enumerate_loop_free(2, 2))
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));

  Rng rng(31);
  for (int it = 0; it < 200; ++it) {
    std::size_t a = rng.uniform(0, 4), b = rng.uniform(0, 4);
    std::size_t c = rng.uniform(0, 4), d = rng.uniform(0, 4);
    if ((a + b) % 2 || (b + c) % 2 || (c + d) % 2) continue;
    BrauerMorphism f = random_morphism(rng, a, b, 1);
    BrauerMorphism g = random_morphism(rng, b, c, 1);
    BrauerMorphism h = random_morphism(rng, c, d, 1);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("loop persistence") {
  Rng rng(12);
  for (int it = 0; it < 200; ++it) {
    std::size_t a = rng.uniform(0, 3), b = rng.uniform(0, 3),
                c = rng.uniform(0, 3);
    if ((a + b) % 2 || (b + c) % 2) continue;
    BrauerMorphism f = random_morphism(rng, a, b, 2);
    BrauerMorphism g = random_morphism(rng, b, c, 2);
    CHECK(compose(g, f).loops() >= f.loops() + g.loops());
  }
}

TEST_CASE("interchange law") {
  Rng rng(77);
  for (int it = 0; it < 200; ++it) {
    std::size_t a = rng.uniform(0, 2), b = rng.uniform(0, 2),
                c = rng.uniform(0, 2);
    std::size_t a2 = rng.uniform(0, 2), b2 = rng.uniform(0, 2),
                c2 = rng.uniform(0, 2);
    if ((a + b) % 2 || (b + c) % 2 || (a2 + b2) % 2 || (b2 + c2) % 2) continue;
    BrauerMorphism f = random_morphism(rng, a, b, 1);
    BrauerMorphism g = random_morphism(rng, b, c, 1);
    BrauerMorphism f2 = random_morphism(rng, a2, b2, 1);
    BrauerMorphism g2 = random_morphism(rng, b2, c2, 1);
    CHECK(compose(tensor(g, g2), tensor(f, f2)) ==
          tensor(compose(g, f), compose(g2, f2)));
  }
}

TEST_CASE("identity tensor factorization") {
  for (std::size_t k = 0; k <= 4; ++k) {
    BrauerMorphism idk = BrauerMorphism::identity(k);
    for (std::size_t m1 = 0; m1 <= k; ++m1)
      for (std::size_t n1 = 0; n1 <= k; ++n1) {
        if ((m1 + n1) % 2 || (k - m1 + k - n1) % 2) continue;
        for (const auto& f : enumerate_loop_free(m1, n1))
          for (const auto& g : enumerate_loop_free(k - m1, k - n1))
            if (tensor(f, g) == idk) {
              CHECK(f == BrauerMorphism::identity(m1));
              CHECK(g == BrauerMorphism::identity(k - m1));
            }
      }
  }
}

TEST_CASE("isomorphisms") {
  CHECK(kB.is_isomorphism());
  auto perm = kB.as_permutation();
  REQUIRE(perm.size() == 2);
  CHECK(perm[0] == 1);
  CHECK(perm[1] == 0);

  CHECK_FALSE(BrauerMorphism::loop().is_isomorphism());
  CHECK_FALSE(compose(kI1, kE1).is_isomorphism());
  CHECK_THROWS_AS(compose(kI1, kE1).as_permutation(), std::invalid_argument);

  // Hom([m],[n]) contains an isomorphism iff m = n.
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; m + n <= 8; ++n) {
      bool found = false;
      for (const auto& f : enumerate_loop_free(m, n))
        if (f.is_isomorphism()) found = true;
      CHECK(found == (m == n));
    }
}

TEST_CASE("word evaluation") {
  Word zig = Word::compose(Word::tensor(Word::id(1), Word::gen_e()),
                           Word::tensor(Word::gen_i(), Word::id(1)));
  CHECK(evaluate_word(zig) == BrauerMorphism::identity(1));

  Word yb_l = Word::compose(
      Word::tensor(Word::gen_b(), Word::id(1)),
      Word::compose(Word::tensor(Word::id(1), Word::gen_b()),
                    Word::tensor(Word::gen_b(), Word::id(1))));
  Word yb_r = Word::compose(
      Word::tensor(Word::id(1), Word::gen_b()),
      Word::compose(Word::tensor(Word::gen_b(), Word::id(1)),
                    Word::tensor(Word::id(1), Word::gen_b())));
  CHECK(evaluate_word(yb_l) == evaluate_word(yb_r));

  CHECK(evaluate_word(Word::id(3)) == BrauerMorphism::identity(3));
  CHECK_THROWS_AS(Word::compose(Word::gen_i(), Word::gen_b()),
                  std::invalid_argument);
}

TEST_CASE("decompose_to_word round-trips") {
  Word id2 = decompose_to_word(BrauerMorphism::identity(2));
  CHECK(id2.kind() == Word::Kind::Id);
  CHECK(id2.id_size() == 2);

  Word lam = decompose_to_word(BrauerMorphism::loop());
  CHECK(evaluate_word(lam) == BrauerMorphism::loop());
  CHECK(lam.kind() == Word::Kind::Compose);  // e1 o i1

  for (const auto& f : enumerate_loop_free(2, 2))
    CHECK(evaluate_word(decompose_to_word(f)) == f);

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; m + n <= 6; ++n) {
      if ((m + n) % 2) continue;
      for (const auto& base : enumerate_loop_free(m, n))
        for (std::size_t loops = 0; loops <= 2; ++loops) {
          BrauerMorphism f = base.with_loops(loops);
          CHECK(evaluate_word(decompose_to_word(f)) == f);
        }
    }
}

TEST_CASE("relation suite at the diagram level") {
  RelationReport report = verify_relations();
  CHECK(report.all_pass());
  REQUIRE(report.entries.size() == 10);
  for (const auto& entry : report.entries) CHECK(entry.pass);

  // (B3) evaluates to the identity strand, (B2) to the braiding.
  auto cases = relation_cases();
  CHECK(evaluate_word(cases[4].lhs) == BrauerMorphism::identity(1));
  CHECK(evaluate_word(cases[2].lhs) == kB);
  CHECK(evaluate_word(cases[8].lhs) == kE1);
}
