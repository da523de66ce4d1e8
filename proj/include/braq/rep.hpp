#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "braq/brauer.hpp"
#include "braq/matrix.hpp"

namespace braq {

/// A symmetric invertible rational matrix Mat(i) together with its inverse
/// Mat(e); dim >= 2 so the loop scalar avoids {0, 1, -1}.
struct DualityStructure {
  std::size_t dim = 0;
  RatMatrix mat_unit;    // Mat(i)
  RatMatrix mat_counit;  // Mat(e) = Mat(i)^{-1}

  /// Image of the loop endomorphism, the trace of the structure: dim V.
  Rational loop_value() const { return Rational(static_cast<long>(dim)); }
};

DualityStructure make_duality(const RatMatrix& mat_unit);

/// The 2-dimensional structure with Mat(i) = [[1,1],[1,0]],
/// Mat(e) = [[0,1],[1,-1]]; its representation is faithful on loops.
DualityStructure example_structure();

/// Image Y(f): V^(x)m -> V^(x)n as a d^n x d^m matrix. Basis order of
/// V^(x)k is lexicographic, leftmost tensor factor most significant, so
/// tensoring maps is the Kronecker product under this flattening.
struct RepMatrix {
  std::size_t m = 0, n = 0, d = 0;
  RatMatrix mat;

  bool operator==(const RepMatrix& rhs) const {
    return m == rhs.m && n == rhs.n && d == rhs.d && mat == rhs.mat;
  }
  bool operator!=(const RepMatrix& rhs) const { return !(*this == rhs); }
  int compare(const RepMatrix& rhs) const;
  bool operator<(const RepMatrix& rhs) const { return compare(rhs) < 0; }
};

/// Matrix of a generator word under the duality structure.
RatMatrix eval_word_matrix(const DualityStructure& D, const Word& w);

/// Y(f), computed through decompose_to_word. Guarded by a size limit
/// d^m, d^n <= 4096.
RepMatrix rep(const DualityStructure& D, const BrauerMorphism& f);

/// Y(f) by direct index contraction over the pairing: Mat(e) entries for
/// In-In pairs, Mat(i) entries for Out-Out pairs, Kronecker deltas for
/// through-strands, times loop_value()^loops. Independent of rep().
RepMatrix rep_direct(const DualityStructure& D, const BrauerMorphism& f);

/// Relation suite under Y: every (B1)-(B5) side evaluated as matrices.
RelationReport verify_relations_matrix(const DualityStructure& D);

struct LoopFaithfulReport {
  bool ok = true;
  std::string counterexample_lhs, counterexample_rhs;  // encodings on failure
};

/// Exhaustively checks Y(phi) = Y(psi) => loops(phi) = loops(psi) over all
/// morphisms with m+n <= max_size and loops <= max_loops.
LoopFaithfulReport check_loop_faithful(const DualityStructure& D,
                                       std::size_t max_size,
                                       std::size_t max_loops);

}  // namespace braq
