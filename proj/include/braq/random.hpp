#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "braq/qelement.hpp"
#include "braq/tft.hpp"

namespace braq {

/// Seeded generator with explicit sampling arithmetic so that identical
/// seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  /// Uniform-ish draw from [lo, hi] inclusive.
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
  }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Uniformly random fixed-point-free involution on m+n points (requires
/// m+n even) with a random loop count up to max_loops.
BrauerMorphism random_morphism(Rng& rng, std::size_t m, std::size_t n,
                               std::size_t max_loops);

/// Random symmetric invertible integer matrix of size d, entries in
/// [-bound, bound].
RatMatrix random_symmetric_invertible(Rng& rng, std::size_t d,
                                      long bound = 3);

DualityStructure random_duality(Rng& rng, std::size_t d);

/// Small random element of Q in diagram keying; slots drawn from objects
/// <= 3 so that composites are frequently nonzero.
QElement random_qelement(Rng& rng, unsigned trunc);

struct EnsembleParams {
  std::size_t max_keys = 5;    // per boundary side
  std::size_t max_object = 3;  // object attached to a key
  std::size_t max_fields = 40;
  std::size_t max_loops = 2;
};

/// Ensemble with fresh keys under the given prefix.
DiscreteCobordism random_cobordism(Rng& rng, const std::string& prefix,
                                   const EnsembleParams& params);

/// Two ensembles sharing their interface: out keys of the first are the in
/// keys of the second.
std::pair<DiscreteCobordism, DiscreteCobordism> random_gluable_pair(
    Rng& rng, const EnsembleParams& params);

}  // namespace braq
