#include "braq/verify.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace braq {

namespace {

void note(CheckReport& report, bool ok, const std::string& what) {
  if (!ok) {
    report.pass = false;
    report.lines.push_back("FAIL " + what);
  }
}

}  // namespace

CheckReport verify_relations_suite(const DualityStructure& D,
                                   std::size_t random_structures,
                                   std::uint64_t seed) {
  CheckReport report;

  RelationReport diagram = verify_relations();
  for (const auto& entry : diagram.entries)
    report.lines.push_back("diagram " + entry.name + ": " +
                           (entry.pass ? "ok" : "FAIL"));
  if (!diagram.all_pass()) report.pass = false;

  auto run_matrix = [&](const DualityStructure& structure,
                        const std::string& label) {
    RelationReport rel = verify_relations_matrix(structure);
    if (!rel.all_pass()) {
      report.pass = false;
      for (const auto& entry : rel.entries)
        if (!entry.pass)
          report.lines.push_back("matrix " + label + " " + entry.name +
                                 ": FAIL");
    }
  };

  run_matrix(D, "configured");
  report.lines.push_back("matrix relations under configured structure: " +
                         std::string(report.pass ? "ok" : "FAIL"));

  Rng rng(seed);
  for (std::size_t i = 0; i < random_structures; ++i) {
    std::size_t d = 2 + i % 3;
    run_matrix(random_duality(rng, d), "random#" + std::to_string(i));
  }
  report.lines.push_back("matrix relations under " +
                         std::to_string(random_structures) +
                         " random structures (dims 2-4): " +
                         std::string(report.pass ? "ok" : "FAIL"));
  return report;
}

namespace {

struct SemiringOps {
  std::function<QElement(const QElement&, const QElement&)> mul;
  std::function<QElement(const QElement&)> left_unit;   // unit for given x
  std::function<QElement(const QElement&)> right_unit;
};

// Supremum oracle for the canonical order: plain set unions over the raw
// coordinate data, bypassing the semiring operations.
QElement sup_by_union(const std::vector<QElement>& family, unsigned trunc) {
  std::map<ObjectPair, std::map<QKey, std::set<unsigned>>> acc;
  for (const auto& x : family)
    for (const auto& [slot, keyed] : x.slots())
      for (const auto& [key, series] : keyed) {
        auto& exps = acc[slot][key];
        exps.insert(series.exponents().begin(), series.exponents().end());
      }
  QElement out;
  for (const auto& [slot, keyed] : acc)
    for (const auto& [key, exps] : keyed) {
      BoolSeries series(trunc);
      for (unsigned e : exps) series.insert(e);
      out.add_term(slot, key, series);
    }
  return out;
}

void run_semiring_laws(CheckReport& report, Rng& rng, std::size_t count,
                       unsigned trunc, const SemiringOps& ops,
                       const std::function<QElement(Rng&)>& draw,
                       const std::string& tag) {
  for (std::size_t it = 0; it < count; ++it) {
    QElement a = draw(rng), b = draw(rng), c = draw(rng);
    const std::string at = tag + " #" + std::to_string(it);

    note(report, ops.mul(ops.mul(a, b), c) == ops.mul(a, ops.mul(b, c)),
         at + " associativity");
    note(report, ops.mul(ops.left_unit(a), a) == a, at + " left unit");
    note(report, ops.mul(a, ops.right_unit(a)) == a, at + " right unit");
    note(report,
         ops.mul(a, q_add(b, c)) == q_add(ops.mul(a, b), ops.mul(a, c)),
         at + " left distributivity");
    note(report,
         ops.mul(q_add(a, b), c) == q_add(ops.mul(a, c), ops.mul(b, c)),
         at + " right distributivity");
    note(report, q_add(a, a) == a, at + " idempotent addition");
    note(report,
         ops.mul(a, QElement::zero()).is_zero() &&
             ops.mul(QElement::zero(), a).is_zero(),
         at + " absorption by zero");

    // Big sums see only the underlying set and give the supremum.
    std::vector<QElement> with_dups{a, b, a, c, b};
    std::vector<QElement> dedup{a, b, c};
    QElement sum = q_big_sum(with_dups);
    note(report, sum == q_big_sum(dedup), at + " set-dependent summation");
    note(report, sum == sup_by_union(dedup, trunc), at + " sum = supremum");
    bool upper = q_leq(a, sum) && q_leq(b, sum) && q_leq(c, sum);
    note(report, upper, at + " sum is an upper bound");

    // Distributivity over a big sum, finitary model of continuity.
    QElement family_sum = q_big_sum({a, b, c});
    note(report,
         ops.mul(family_sum, c) ==
             q_big_sum({ops.mul(a, c), ops.mul(b, c), ops.mul(c, c)}),
         at + " distributivity over big sums");
  }
}

}  // namespace

CheckReport verify_semiring_suite(std::uint64_t seed, std::size_t count,
                                  unsigned trunc, Keying keying,
                                  const DualityStructure& D) {
  CheckReport report;
  Rng rng(seed);

  if (keying == Keying::Diagram) {
    auto draw = [trunc](Rng& r) { return random_qelement(r, trunc); };
    SemiringOps compose_ops{
        [](const QElement& x, const QElement& y) { return q_compose(x, y); },
        [trunc](const QElement& x) {
          return q_compose_identity(x.domain_objects(), trunc);
        },
        [trunc](const QElement& x) {
          return q_compose_identity(x.codomain_objects(), trunc);
        }};
    run_semiring_laws(report, rng, count, trunc, compose_ops, draw, "Q^c");
    SemiringOps monoidal_ops{
        [](const QElement& x, const QElement& y) { return q_monoidal(x, y); },
        [trunc](const QElement&) { return q_monoidal_identity(trunc); },
        [trunc](const QElement&) { return q_monoidal_identity(trunc); }};
    run_semiring_laws(report, rng, count, trunc, monoidal_ops, draw, "Q^m");
  } else {
    auto index = std::make_shared<ShellIndex>(D);
    auto draw = [trunc, &D](Rng& r) {
      return to_matrix_keys(random_qelement(r, trunc), D);
    };
    SemiringOps compose_ops{
        [index](const QElement& x, const QElement& y) {
          return q_compose_matrix(x, y, *index);
        },
        [trunc, &D](const QElement& x) {
          return to_matrix_keys(q_compose_identity(x.domain_objects(), trunc),
                                D);
        },
        [trunc, &D](const QElement& x) {
          return to_matrix_keys(
              q_compose_identity(x.codomain_objects(), trunc), D);
        }};
    run_semiring_laws(report, rng, count, trunc, compose_ops, draw,
                      "Q^c(matrix)");
    SemiringOps monoidal_ops{
        [](const QElement& x, const QElement& y) {
          return q_monoidal_matrix(x, y);
        },
        [trunc, &D](const QElement&) {
          return to_matrix_keys(q_monoidal_identity(trunc), D);
        },
        [trunc, &D](const QElement&) {
          return to_matrix_keys(q_monoidal_identity(trunc), D);
        }};
    run_semiring_laws(report, rng, count, trunc, monoidal_ops, draw,
                      "Q^m(matrix)");
  }

  std::ostringstream line;
  line << "semiring laws on " << count << " randomized elements per product: "
       << (report.pass ? "ok" : "FAIL");
  report.lines.push_back(line.str());
  return report;
}

CheckReport verify_gluing_suite(std::uint64_t seed, std::size_t count,
                                unsigned trunc, Keying keying,
                                const DualityStructure& D) {
  CheckReport report;
  Rng rng(seed);
  EnsembleParams params;
  for (std::size_t it = 0; it < count; ++it) {
    auto [W1, W2] = random_gluable_pair(rng, params);
    if (keying == Keying::Diagram) {
      CheckReport one = verify_gluing(W1, W2, trunc);
      if (!one.pass) {
        report.pass = false;
        report.lines.push_back("pair #" + std::to_string(it) + ": UNEQUAL");
      }
    } else {
      // Matrix-level equality: both routes projected along Y.
      State glued = state_sum(glue(W1, W2), trunc);
      State contracted = contract(state_sum(W1, trunc), state_sum(W2, trunc));
      bool equal = true;
      for (const auto& key : glued.all_keys())
        if (!(to_matrix_keys(glued.at(key), D) ==
              to_matrix_keys(contracted.at(key), D)))
          equal = false;
      if (!equal) {
        report.pass = false;
        report.lines.push_back("pair #" + std::to_string(it) + ": UNEQUAL");
      }
    }
  }
  report.lines.push_back("gluing law on " + std::to_string(count) +
                         " randomized pairs: " +
                         (report.pass ? "ok" : "FAIL"));
  return report;
}

CheckReport verify_disjoint_suite(std::uint64_t seed, std::size_t count,
                                  unsigned trunc) {
  CheckReport report;
  Rng rng(seed);
  EnsembleParams params;
  for (std::size_t it = 0; it < count; ++it) {
    DiscreteCobordism W = random_cobordism(rng, "l", params);
    DiscreteCobordism W2 = random_cobordism(rng, "r", params);
    CheckReport one = verify_disjoint(W, W2, trunc);
    if (!one.pass) {
      report.pass = false;
      report.lines.push_back("pair #" + std::to_string(it) + ": UNEQUAL");
    }
  }
  report.lines.push_back("disjoint-union law on " + std::to_string(count) +
                         " randomized pairs: " +
                         (report.pass ? "ok" : "FAIL"));
  return report;
}

CheckReport verify_rationality_suite(std::uint64_t seed, std::size_t count,
                                     std::size_t depth, unsigned trunc) {
  CheckReport report;
  Rng rng(seed);
  EnsembleParams params;
  for (std::size_t it = 0; it < count; ++it) {
    DiscreteCobordism W = random_cobordism(rng, "w", params);
    CheckReport one = verify_rationality(W, depth, trunc);
    if (!one.pass) report.pass = false;
    report.lines.push_back("ensemble #" + std::to_string(it) + " (" +
                           std::to_string(W.fields().size()) + " fields): " +
                           (one.pass ? "rational" : "FAIL"));
    for (const auto& line : one.lines) report.lines.push_back("  " + line);
  }
  report.lines.push_back("rationality at depth " + std::to_string(depth) +
                         " on " + std::to_string(count) + " ensembles: " +
                         (report.pass ? "ok" : "FAIL"));
  return report;
}

namespace {

FunMap random_two_factor(Rng& rng, const std::vector<std::string>& A,
                         const std::vector<std::string>& B, unsigned trunc) {
  FunMap f(std::vector<std::vector<std::string>>{A, B});
  for (const auto& a : A)
    for (const auto& b : B)
      if (rng.coin()) f.set({a, b}, random_qelement(rng, trunc));
  return f;
}

}  // namespace

CheckReport verify_tensor_iso_suite(std::uint64_t seed, std::size_t triples,
                                    unsigned trunc) {
  CheckReport report;

  // Fixed pool: zero, a one-slot element, a mixed two-slot element.
  QElement u = q_from_morphism(BrauerMorphism::identity(1), trunc);
  QElement v = q_add(
      q_from_morphism(tensor(BrauerMorphism::loop(),
                             BrauerMorphism::braiding(1, 1)),
                      trunc),
      q_from_morphism(compose(BrauerMorphism::unit(1),
                              BrauerMorphism::counit(1)),
                      trunc));
  const std::vector<QElement> pool{QElement::zero(), u, v};

  static const std::vector<std::string> kNames{"x", "y", "z"};
  std::size_t roundtrips = 0;
  for (std::size_t na = 1; na <= 3; ++na) {
    for (std::size_t nb = 1; nb <= 3; ++nb) {
      std::vector<std::string> A(kNames.begin(), kNames.begin() + na);
      std::vector<std::string> B(kNames.begin(), kNames.begin() + nb);
      const std::size_t cells = na * nb;
      std::size_t assignments = 1;
      for (std::size_t i = 0; i < cells; ++i) assignments *= pool.size();
      for (std::size_t code = 0; code < assignments; ++code) {
        FunMap H(std::vector<std::vector<std::string>>{A, B});
        std::size_t rest = code;
        for (const auto& a : A)
          for (const auto& b : B) {
            H.set({a, b}, pool[rest % pool.size()]);
            rest /= pool.size();
          }
        RoundTripReport rt = tensor_beta_roundtrip(H);
        if (!rt.pass) {
          report.pass = false;
          report.lines.push_back("roundtrip failed at |A|=" +
                                 std::to_string(na) + " |B|=" +
                                 std::to_string(nb) + " code " +
                                 std::to_string(code));
        }
        ++roundtrips;
      }
    }
  }
  report.lines.push_back("alpha/beta round-trips over the fixed pool: " +
                         std::to_string(roundtrips) + " maps, " +
                         (report.pass ? "ok" : "FAIL"));

  Rng rng(seed);
  const std::vector<std::string> A{"a0", "a1", "a2"}, B{"b0", "b1", "b2"},
      C{"c0", "c1", "c2"}, E{"d0", "d1", "d2"};
  bool assoc = true;
  for (std::size_t it = 0; it < triples; ++it) {
    FunMap f = random_two_factor(rng, A, B, trunc);
    FunMap g = random_two_factor(rng, B, C, trunc);
    FunMap h = random_two_factor(rng, C, E, trunc);
    if (!(contract(contract(f, g), h) == contract(f, contract(g, h))))
      assoc = false;
  }
  note(report, assoc, "contraction associativity");
  report.lines.push_back("contraction associativity on " +
                         std::to_string(triples) + " random triples: " +
                         (assoc ? "ok" : "FAIL"));
  return report;
}

}  // namespace braq
