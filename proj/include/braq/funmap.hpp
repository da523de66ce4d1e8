#pragma once

#include <map>
#include <string>
#include <vector>

#include "braq/qelement.hpp"

namespace braq {

/// Q-valued function on a declared finite index set, possibly a cartesian
/// product of several factor sets. Keys are tuples of opaque strings;
/// missing entries read as zero; stored entries are never zero.
class FunMap {
 public:
  using Key = std::vector<std::string>;

  explicit FunMap(std::vector<std::vector<std::string>> factors);
  /// Arity-1 map on a plain index set.
  static FunMap on(std::vector<std::string> index);

  std::size_t arity() const { return factors_.size(); }
  const std::vector<std::vector<std::string>>& factors() const {
    return factors_;
  }

  const QElement& at(const Key& key) const;
  void set(const Key& key, QElement value);  // zero erases

  const std::map<Key, QElement>& entries() const { return entries_; }

  /// All keys of the full product index set, lexicographic.
  std::vector<Key> all_keys() const;

  bool operator==(const FunMap& rhs) const {
    return factors_ == rhs.factors_ && entries_ == rhs.entries_;
  }
  bool operator!=(const FunMap& rhs) const { return !(*this == rhs); }

 private:
  void check_key(const Key& key) const;

  std::vector<std::vector<std::string>> factors_;
  std::map<Key, QElement> entries_;
};

using ProductFunMap = FunMap;

enum class QProduct { Compose, Monoidal };

/// The map (a, b) -> F(a) * G(b) on the product index set, with the chosen
/// multiplication of Q; realizes both completed tensor products in the
/// finite function model.
FunMap tensor_alpha(const FunMap& F, const FunMap& G, QProduct product);

struct RoundTripReport {
  bool pass = true;
  std::string detail;
};

/// Splits a two-factor map into its idempotent sum of elementary tensors
/// and reassembles through genuine Q^c products; the result must equal the
/// input exactly.
RoundTripReport tensor_beta_roundtrip(const FunMap& H);

/// (a, c) -> sum over b of H(a,b) * G(b,c) in Q^c; the contraction that
/// propagates states along cobordisms. Middle factors must agree.
FunMap contract(const FunMap& f, const FunMap& g);

/// Pointwise Q^c actions used to state middle-linearity.
FunMap scale_right(const FunMap& f, const QElement& s);
FunMap scale_left(const QElement& s, const FunMap& g);

}  // namespace braq
