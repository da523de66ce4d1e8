#pragma once

#include <map>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "braq/brauer.hpp"
#include "braq/qseries.hpp"
#include "braq/rep.hpp"

namespace braq {

/// Slot of the completion: the pair of objects ([m], [n]).
using ObjectPair = std::pair<std::size_t, std::size_t>;

/// Key of a Q coordinate: a loop-free Brauer morphism (exact, canonical,
/// independent of any duality structure) or its matrix image under Y.
class QKey {
 public:
  static QKey diagram(const BrauerMorphism& f);
  static QKey matrix(const RepMatrix& mat);

  bool is_diagram() const { return v_.index() == 0; }
  const BrauerMorphism& as_diagram() const { return std::get<0>(v_); }
  const RepMatrix& as_matrix() const { return std::get<1>(v_); }

  bool operator==(const QKey& rhs) const;
  bool operator<(const QKey& rhs) const;

 private:
  explicit QKey(std::variant<BrauerMorphism, RepMatrix> v) : v_(std::move(v)) {}
  std::variant<BrauerMorphism, RepMatrix> v_;
};

/// Element of the profinite idempotent completion Q: a finitely supported
/// family of Boolean series, indexed per slot (m,n) by keys. Kept
/// canonical: no zero series, no empty slots.
class QElement {
 public:
  using KeyedSeries = std::map<QKey, BoolSeries>;

  QElement() = default;
  static QElement zero() { return {}; }

  bool is_zero() const { return slots_.empty(); }
  const std::map<ObjectPair, KeyedSeries>& slots() const { return slots_; }

  /// Idempotent-accumulates one term; drops zeros, keeps canonical form.
  void add_term(ObjectPair slot, const QKey& key, const BoolSeries& series);

  const BoolSeries* find(ObjectPair slot, const QKey& key) const;

  bool operator==(const QElement& rhs) const { return slots_ == rhs.slots_; }
  bool operator!=(const QElement& rhs) const { return !(*this == rhs); }
  bool operator<(const QElement& rhs) const { return slots_ < rhs.slots_; }

  std::set<std::size_t> domain_objects() const;
  std::set<std::size_t> codomain_objects() const;

  /// Truncation degree of the stored series; fallback for the zero element.
  unsigned trunc_or(unsigned fallback) const;

 private:
  std::map<ObjectPair, KeyedSeries> slots_;
};

/// Y S(F) (x) q^k for a single morphism: key = loop-free part, series q^k.
QElement q_from_morphism(const BrauerMorphism& f,
                         unsigned trunc = kDefaultTrunc);

QElement q_add(const QElement& x, const QElement& y);
QElement q_big_sum(const std::vector<QElement>& family);

/// Canonical order of the idempotent addition: x <= y iff x + y = y.
bool q_leq(const QElement& x, const QElement& y);

/// Composition product of Q^c on diagram-keyed elements: keys compose
/// along matching middle objects, closed components stripped into powers
/// of q.
QElement q_compose(const QElement& x, const QElement& y);

/// Monoidal product of Q^m on diagram-keyed elements: keys tensor, slots
/// add.
QElement q_monoidal(const QElement& x, const QElement& y);

/// Finite section of the Q^c unit: key identity(n) -> 1 at slot (n,n) for
/// each requested object.
QElement q_compose_identity(const std::set<std::size_t>& objects,
                            unsigned trunc = kDefaultTrunc);

/// The Q^m unit: key identity(0) -> 1 at slot (0,0).
QElement q_monoidal_identity(unsigned trunc = kDefaultTrunc);

/// Irreducible generators of a scale-profinite set: drops every matrix
/// expressible as scale^k times another one, k > 0. Requires scale outside
/// {0, 1, -1} and nonzero generators.
std::vector<RepMatrix> minimal_shell(const std::vector<RepMatrix>& generators,
                                     const Rational& scale);

/// Projects diagram keys to their Y images; colliding keys merge by series
/// union. Equality after this projection is the matrix-level equality of
/// Q-values.
QElement to_matrix_keys(const QElement& x, const DualityStructure& D);

/// Shell-coordinate lookup for matrix-keyed arithmetic: decomposes an
/// arbitrary Y image as loop_value^k times a loop-free image.
class ShellIndex {
 public:
  explicit ShellIndex(const DualityStructure& D) : D_(D) {}

  const std::vector<RepMatrix>& shell(std::size_t m, std::size_t n);
  /// (k, shell element) with input = loop_value^k * element.
  std::pair<std::size_t, RepMatrix> decompose(const RepMatrix& image);

  const DualityStructure& duality() const { return D_; }

 private:
  DualityStructure D_;
  std::map<ObjectPair, std::vector<RepMatrix>> cache_;
};

/// Q^c product on matrix-keyed elements: matrix composition followed by
/// shell renormalization. The matrix route of the two-route oracle.
QElement q_compose_matrix(const QElement& x, const QElement& y,
                          ShellIndex& index);

/// Q^m product on matrix-keyed elements: Kronecker product of keys.
QElement q_monoidal_matrix(const QElement& x, const QElement& y);

}  // namespace braq
