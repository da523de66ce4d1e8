#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "braq/qelement.hpp"
#include "braq/random.hpp"

using namespace braq;

namespace {

constexpr unsigned kN = 32;

BoolSeries bs(std::initializer_list<unsigned> exps) {
  return BoolSeries::from_exponents(exps, kN);
}

QElement single(const BrauerMorphism& f, const BoolSeries& series) {
  QElement out;
  auto [base, k] = strip_loops(f);
  out.add_term({f.dom(), f.cod()}, QKey::diagram(base),
               series.shifted(static_cast<unsigned>(k)));
  return out;
}

const BrauerMorphism kId1 = BrauerMorphism::identity(1);
const BrauerMorphism kI1 = BrauerMorphism::unit(1);
const BrauerMorphism kE1 = BrauerMorphism::counit(1);

// Direct expansion of q^r (1 + beta q^(2s+1)) * sum q^(2k), the series the
// rationality theorem names, truncated by plain loops.
BoolSeries expand_rational(unsigned r, bool beta, unsigned s, unsigned trunc) {
  BoolSeries out(trunc);
  for (unsigned k = 0; r + 2 * k < trunc; ++k) {
    out.insert(r + 2 * k);
    if (beta) out.insert(r + 2 * s + 1 + 2 * k);
  }
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  BoolSeries one_plus_q = bs({0, 1});
  CHECK(one_plus_q * one_plus_q == bs({0, 1, 2}));  // 1+1 absorbs to 1

  BoolSeries g = BoolSeries::geom2(kN);
  CHECK(g.contains(0));
  CHECK(g.contains(30));
  CHECK_FALSE(g.contains(31));

  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    BoolSeries f(kN);
    for (int j = 0; j < 4; ++j)
      f.insert(static_cast<unsigned>(rng.uniform(0, kN - 1)));
    CHECK(f + f == f);
    CHECK(f * BoolSeries::one(kN) == f);
    CHECK((f * BoolSeries::zero(kN)).is_zero());
  }

  // Truncation: products drop exponents at or above N.
  CHECK((BoolSeries::qpow(kN - 1, kN) * BoolSeries::qpow(1, kN)).is_zero());
}

TEST_CASE("big sums are set-dependent suprema") {
  BoolSeries f = bs({0, 3}), g = bs({1});
  CHECK(bs_big_sum({f, f, g}, kN) == bs_big_sum({f, g}, kN));
  CHECK(bs_big_sum({}, kN).is_zero());

  Rng rng(2);
  for (int it = 0; it < 40; ++it) {
    std::vector<BoolSeries> family;
    std::set<unsigned> expected;
    for (int j = 0; j < 5; ++j) {
      BoolSeries s(kN);
      for (int e = 0; e < 3; ++e) {
        unsigned exp = static_cast<unsigned>(rng.uniform(0, kN - 1));
        s.insert(exp);
        expected.insert(exp);
      }
      family.push_back(s);
    }
    BoolSeries sum = bs_big_sum(family, kN);
    CHECK(sum.exponents() == expected);  // explicit sup over subset order
    for (const auto& s : family) CHECK(s.leq(sum));
  }
}

TEST_CASE("rationalize") {
  auto even = rationalize(BoolSeries::geom2(kN));
  REQUIRE(even.has_value());
  CHECK(even->r == 0);
  CHECK_FALSE(even->beta);

  BoolSeries q3 = expand_rational(3, true, 0, kN);
  // q^3 (1+q)/(1-q^2) = q^3 + q^4 + q^5 + ...
  for (unsigned e = 3; e < kN; ++e) CHECK(q3.contains(e));
  auto form = rationalize(q3);
  REQUIRE(form.has_value());
  CHECK(form->r == 3);
  CHECK(form->beta);
  CHECK(form->s == 0);

  CHECK_FALSE(rationalize(bs({0, 3})).has_value());
  CHECK_FALSE(rationalize(BoolSeries::zero(kN)).has_value());
  // Too narrow a window to be conclusive.
  CHECK_FALSE(rationalize(BoolSeries::from_exponents({3}, 4)).has_value());

  Rng rng(6);
  for (int it = 0; it < 60; ++it) {
    unsigned r = static_cast<unsigned>(rng.uniform(0, 6));
    bool beta = rng.coin();
    unsigned s = static_cast<unsigned>(rng.uniform(0, 4));
    auto got = rationalize(expand_rational(r, beta, s, kN));
    REQUIRE(got.has_value());
    CHECK(got->r == r);
    CHECK(got->beta == beta);
    if (beta) CHECK(got->s == s);
  }
}

TEST_CASE("q_from_morphism") {
  QElement id2 = q_from_morphism(BrauerMorphism::identity(2), kN);
  const BoolSeries* series =
      id2.find({2, 2}, QKey::diagram(BrauerMorphism::identity(2)));
  REQUIRE(series != nullptr);
  CHECK(*series == BoolSeries::one(kN));

  BrauerMorphism b = BrauerMorphism::braiding(1, 1);
  QElement lb = q_from_morphism(tensor(BrauerMorphism::loop(), b), kN);
  const BoolSeries* sb = lb.find({2, 2}, QKey::diagram(b));
  REQUIRE(sb != nullptr);
  CHECK(*sb == BoolSeries::qpow(1, kN));

  BrauerMorphism three = tensor(
      BrauerMorphism::loop(),
      tensor(BrauerMorphism::loop(), BrauerMorphism::loop()));
  QElement l3 = q_from_morphism(three, kN);
  const BoolSeries* s3 =
      l3.find({0, 0}, QKey::diagram(BrauerMorphism::identity(0)));
  REQUIRE(s3 != nullptr);
  CHECK(*s3 == BoolSeries::qpow(3, kN));

  // Shell normal form: loops^k (x) base keys to base with series q^k.
  Rng rng(9);
  for (int it = 0; it < 50; ++it) {
    auto basis = enumerate_loop_free(2, 2);
    BrauerMorphism base = basis[rng.uniform(0, basis.size() - 1)];
    std::size_t k = rng.uniform(0, 5);
    BrauerMorphism f = base.with_loops(k);
    QElement x = q_from_morphism(f, kN);
    const BoolSeries* got = x.find({2, 2}, QKey::diagram(base));
    REQUIRE(got != nullptr);
    CHECK(*got == BoolSeries::qpow(static_cast<unsigned>(k), kN));
  }
}

TEST_CASE("q_add") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    QElement x = random_qelement(rng, kN);
    QElement y = random_qelement(rng, kN);
    CHECK(q_add(x, x) == x);
    CHECK(q_add(x, y) == q_add(y, x));
    CHECK(q_big_sum({x, y, x, y}) == q_big_sum({x, y}));
  }
  QElement a = single(kId1, bs({1}));
  QElement b = single(kId1, bs({0}));
  QElement sum = q_add(a, b);
  const BoolSeries* s = sum.find({1, 1}, QKey::diagram(kId1));
  REQUIRE(s != nullptr);
  CHECK(*s == bs({0, 1}));
}

TEST_CASE("q_compose") {
  // i1 then e1 is the loop: slot (0,0), key identity(0), series q.
  QElement qi = q_from_morphism(kI1, kN);
  QElement qe = q_from_morphism(kE1, kN);
  QElement lam = q_compose(qi, qe);
  const BoolSeries* s =
      lam.find({0, 0}, QKey::diagram(BrauerMorphism::identity(0)));
  REQUIRE(s != nullptr);
  CHECK(*s == BoolSeries::qpow(1, kN));

  Rng rng(13);
  for (int it = 0; it < 80; ++it) {
    QElement x = random_qelement(rng, kN);
    QElement y = random_qelement(rng, kN);
    QElement z = random_qelement(rng, kN);
    CHECK(q_compose(q_compose(x, y), z) == q_compose(x, q_compose(y, z)));
    CHECK(q_compose(q_compose_identity(x.domain_objects(), kN), x) == x);
    CHECK(q_compose(x, q_compose_identity(x.codomain_objects(), kN)) == x);
    // Infinite distributivity at finite scale.
    CHECK(q_compose(q_big_sum({x, y, z}), z) ==
          q_big_sum({q_compose(x, z), q_compose(y, z), q_compose(z, z)}));
  }
}

TEST_CASE("q_monoidal") {
  // The diagram tensor is order-sensitive: 1 (x) e1 and e1 (x) 1 are the
  // two distinct [3] -> [1] stackings. (For i1 and e1 themselves the two
  // orders happen to coincide, as one factor has no inputs and the other
  // no outputs.)
  QElement q1 = q_from_morphism(kId1, kN);
  QElement qe = q_from_morphism(kE1, kN);
  QElement qi = q_from_morphism(kI1, kN);
  CHECK(q_monoidal(q1, qe) != q_monoidal(qe, q1));
  CHECK(q_monoidal(qi, qe) == q_monoidal(qe, qi));

  Rng rng(17);
  for (int it = 0; it < 80; ++it) {
    QElement x = random_qelement(rng, kN);
    QElement y = random_qelement(rng, kN);
    QElement z = random_qelement(rng, kN);
    CHECK(q_monoidal(q_monoidal_identity(kN), x) == x);
    CHECK(q_monoidal(x, q_monoidal_identity(kN)) == x);
    CHECK(q_monoidal(q_monoidal(x, y), z) == q_monoidal(x, q_monoidal(y, z)));
    CHECK(q_monoidal(x, q_add(y, z)) ==
          q_add(q_monoidal(x, y), q_monoidal(x, z)));
  }
}

TEST_CASE("minimal_shell") {
  DualityStructure ex = example_structure();
  RepMatrix y = rep(ex, BrauerMorphism::identity(2));
  RepMatrix y_scaled{y.m, y.n, y.d, y.mat.scaled(2)};
  auto one_step = minimal_shell({y, y_scaled}, Rational(2));
  REQUIRE(one_step.size() == 1);
  CHECK(one_step[0] == y);

  // The three loop-free endomorphism images of [2] are irreducible.
  std::vector<RepMatrix> images;
  for (const auto& f : enumerate_loop_free(2, 2)) images.push_back(rep(ex, f));
  auto shell = minimal_shell(images, Rational(2));
  REQUIRE(shell.size() == 3);
  bool has_id = false, has_swap = false, has_cupcap = false;
  RepMatrix swap = rep(ex, BrauerMorphism::braiding(1, 1));
  RepMatrix cupcap =
      rep(ex, compose(BrauerMorphism::unit(1), BrauerMorphism::counit(1)));
  for (const auto& s : shell) {
    if (s.mat == RatMatrix::identity(4)) has_id = true;
    if (s == swap) has_swap = true;
    if (s == cupcap) has_cupcap = true;
  }
  CHECK(has_id);
  CHECK(has_swap);
  CHECK(has_cupcap);

  // Chains reduce to their minimal representatives.
  RepMatrix y2{y.m, y.n, y.d, y.mat.scaled(4)};
  auto chain = minimal_shell({y, y_scaled, y2, swap}, Rational(2));
  REQUIRE(chain.size() == 2);

  CHECK_THROWS_AS(minimal_shell({y}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_shell({y}, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(minimal_shell({y}, Rational(-1)), std::invalid_argument);

  // Fractional scales reduce in the shrinking direction too.
  RepMatrix y_half{y.m, y.n, y.d, y.mat.scaled(Rational(1, 2))};
  auto frac = minimal_shell({y, y_half}, Rational(1, 2));
  REQUIRE(frac.size() == 1);
  CHECK(frac[0] == y);
}

TEST_CASE("to_matrix_keys") {
  DualityStructure ex = example_structure();
  QElement x = q_from_morphism(BrauerMorphism::identity(2), kN);
  QElement projected = to_matrix_keys(x, ex);
  RepMatrix id{2, 2, 2, RatMatrix::identity(4)};
  const BoolSeries* s = projected.find({2, 2}, QKey::matrix(id));
  REQUIRE(s != nullptr);
  CHECK(*s == BoolSeries::one(kN));

  // Key-bijective on the [2] endomorphism shell (Y injective there).
  QElement all;
  for (const auto& f : enumerate_loop_free(2, 2))
    all = q_add(all, q_from_morphism(f, kN));
  QElement proj = to_matrix_keys(all, ex);
  CHECK(proj.slots().at({2, 2}).size() == 3);

  // Merge order cannot matter: projection of a sum = sum of projections.
  Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    QElement a = random_qelement(rng, kN);
    QElement b = random_qelement(rng, kN);
    CHECK(to_matrix_keys(q_add(a, b), ex) ==
          q_add(to_matrix_keys(a, ex), to_matrix_keys(b, ex)));
  }
}

TEST_CASE("two-route oracle: diagram versus matrix composition") {
  DualityStructure ex = example_structure();
  ShellIndex index(ex);
  Rng rng(29);

  // All composable key pairs over the loop-free sets with m+n <= 4.
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t p = 0; m + p <= 4; ++p)
      for (std::size_t n = 0; p + n <= 4; ++n) {
        if ((m + p) % 2 || (p + n) % 2) continue;
        for (const auto& phi : enumerate_loop_free(m, p))
          for (const auto& psi : enumerate_loop_free(p, n)) {
            BoolSeries s1(kN), s2(kN);
            s1.insert(static_cast<unsigned>(rng.uniform(0, 5)));
            s2.insert(static_cast<unsigned>(rng.uniform(0, 5)));
            QElement x = single(phi, s1);
            QElement y = single(psi, s2);
            QElement diagram_route = to_matrix_keys(q_compose(x, y), ex);
            QElement matrix_route = q_compose_matrix(
                to_matrix_keys(x, ex), to_matrix_keys(y, ex), index);
            CHECK(diagram_route == matrix_route);
          }
      }

  // And on random multi-term elements.
  for (int it = 0; it < 40; ++it) {
    QElement x = random_qelement(rng, kN);
    QElement y = random_qelement(rng, kN);
    CHECK(to_matrix_keys(q_compose(x, y), ex) ==
          q_compose_matrix(to_matrix_keys(x, ex), to_matrix_keys(y, ex),
                           index));
    CHECK(to_matrix_keys(q_monoidal(x, y), ex) ==
          q_monoidal_matrix(to_matrix_keys(x, ex), to_matrix_keys(y, ex)));
  }
}
