#include "braq/random.hpp"

#include <stdexcept>
#include <vector>

namespace braq {

BrauerMorphism random_morphism(Rng& rng, std::size_t m, std::size_t n,
                               std::size_t max_loops) {
  if ((m + n) % 2 != 0)
    throw std::invalid_argument("random_morphism: m+n must be even");
  std::vector<std::size_t> open;
  for (std::size_t p = 0; p < m + n; ++p) open.push_back(p);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (!open.empty()) {
    std::size_t a = open.front();
    open.erase(open.begin());
    std::size_t pick = rng.uniform(0, open.size() - 1);
    std::size_t b = open[pick];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    pairs.emplace_back(a, b);
  }
  return BrauerMorphism::from_pairing(m, n, pairs,
                                      rng.uniform(0, max_loops));
}

RatMatrix random_symmetric_invertible(Rng& rng, std::size_t d, long bound) {
  for (;;) {
    RatMatrix mat(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = r; c < d; ++c) {
        long value = static_cast<long>(rng.uniform(0, 2 * bound)) - bound;
        mat.at(r, c) = value;
        mat.at(c, r) = value;
      }
    if (mat.determinant() != 0) return mat;
  }
}

DualityStructure random_duality(Rng& rng, std::size_t d) {
  return make_duality(random_symmetric_invertible(rng, d));
}

QElement random_qelement(Rng& rng, unsigned trunc) {
  // Slots biased toward small matching objects so products interact.
  static const ObjectPair kSlots[] = {{0, 0}, {1, 1}, {2, 2}, {0, 2},
                                      {2, 0}, {1, 3}, {3, 1}, {2, 2}};
  QElement out;
  std::size_t terms = rng.uniform(1, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    ObjectPair slot = kSlots[rng.uniform(0, std::size(kSlots) - 1)];
    auto basis = enumerate_loop_free(slot.first, slot.second);
    const BrauerMorphism& key = basis[rng.uniform(0, basis.size() - 1)];
    BoolSeries series(trunc);
    std::size_t exps = rng.uniform(1, 3);
    for (std::size_t i = 0; i < exps; ++i)
      series.insert(static_cast<unsigned>(rng.uniform(0, 11)));
    out.add_term(slot, QKey::diagram(key), series);
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, std::size_t>> random_keys(
    Rng& rng, const std::string& prefix, const EnsembleParams& params) {
  std::size_t count = rng.uniform(1, params.max_keys);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < count; ++i)
    keys.emplace_back(prefix + std::to_string(i),
                      rng.uniform(0, params.max_object));
  return keys;
}

void random_fields(Rng& rng, DiscreteCobordism& W,
                   const std::vector<std::pair<std::string, std::size_t>>& ins,
                   const std::vector<std::pair<std::string, std::size_t>>& outs,
                   const EnsembleParams& params) {
  std::size_t count = rng.uniform(0, params.max_fields);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& [in_key, m] = ins[rng.uniform(0, ins.size() - 1)];
    const auto& [out_key, n] = outs[rng.uniform(0, outs.size() - 1)];
    if ((m + n) % 2 != 0) continue;  // no morphism between these objects
    W.add_field(in_key, out_key,
                random_morphism(rng, m, n, params.max_loops));
  }
}

}  // namespace

DiscreteCobordism random_cobordism(Rng& rng, const std::string& prefix,
                                   const EnsembleParams& params) {
  auto ins = random_keys(rng, prefix + "i", params);
  auto outs = random_keys(rng, prefix + "o", params);
  DiscreteCobordism W;
  for (const auto& [key, object] : ins) W.declare_in(key, object);
  for (const auto& [key, object] : outs) W.declare_out(key, object);
  random_fields(rng, W, ins, outs, params);
  return W;
}

std::pair<DiscreteCobordism, DiscreteCobordism> random_gluable_pair(
    Rng& rng, const EnsembleParams& params) {
  auto ins = random_keys(rng, "a", params);
  auto mids = random_keys(rng, "u", params);
  auto outs = random_keys(rng, "b", params);
  DiscreteCobordism W1, W2;
  for (const auto& [key, object] : ins) W1.declare_in(key, object);
  for (const auto& [key, object] : mids) {
    W1.declare_out(key, object);
    W2.declare_in(key, object);
  }
  for (const auto& [key, object] : outs) W2.declare_out(key, object);
  random_fields(rng, W1, ins, mids, params);
  random_fields(rng, W2, mids, outs, params);
  return {std::move(W1), std::move(W2)};
}

}  // namespace braq
