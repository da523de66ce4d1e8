#pragma once

#include <cstdint>

#include "braq/random.hpp"
#include "braq/tft.hpp"

namespace braq {

enum class Keying { Diagram, Matrix };

/// (B1)-(B5) plus the derived symmetries, at the diagram level and as
/// exact matrix identities under D and `random_structures` further random
/// duality structures of dims 2-4.
CheckReport verify_relations_suite(const DualityStructure& D,
                                   std::size_t random_structures,
                                   std::uint64_t seed);

/// Semiring laws for Q^c and Q^m on randomized small elements:
/// associativity, units, two-sided distributivity, idempotent addition,
/// absorption by zero, set-dependent big sums, and sum = supremum.
CheckReport verify_semiring_suite(std::uint64_t seed, std::size_t count,
                                  unsigned trunc, Keying keying,
                                  const DualityStructure& D);

CheckReport verify_gluing_suite(std::uint64_t seed, std::size_t count,
                                unsigned trunc, Keying keying,
                                const DualityStructure& D);

CheckReport verify_disjoint_suite(std::uint64_t seed, std::size_t count,
                                  unsigned trunc);

CheckReport verify_rationality_suite(std::uint64_t seed, std::size_t count,
                                     std::size_t depth, unsigned trunc);

/// Exhaustive alpha/beta round-trips over a fixed value pool on index sets
/// of size <= 3, plus contraction associativity on random triples.
CheckReport verify_tensor_iso_suite(std::uint64_t seed, std::size_t triples,
                                    unsigned trunc);

}  // namespace braq
