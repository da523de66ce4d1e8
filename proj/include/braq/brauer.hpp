#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace braq {

/// A morphism [m] -> [n] of the Brauer category: a fixed-point-free
/// involution on the m incoming and n outgoing boundary points, plus a
/// count of closed components. Structural equality is morphism equality.
///
/// Points live in a single 0-based index space [0, m+n): inputs first
/// (point i, i < m, is In(i+1)), outputs after (point m+j is Out(j+1)).
class BrauerMorphism {
 public:
  static BrauerMorphism identity(std::size_t n);
  static BrauerMorphism braiding(std::size_t m, std::size_t n);
  static BrauerMorphism unit(std::size_t n);    // i_n : [0] -> [2n], n >= 1
  static BrauerMorphism counit(std::size_t n);  // e_n : [2n] -> [0], n >= 1
  static BrauerMorphism loop();
  static BrauerMorphism from_pairing(
      std::size_t m, std::size_t n,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
      std::size_t loops = 0);

  std::size_t dom() const { return m_; }
  std::size_t cod() const { return n_; }
  std::size_t loops() const { return loops_; }
  std::size_t points() const { return m_ + n_; }
  std::size_t partner(std::size_t p) const { return partner_[p]; }

  bool is_in(std::size_t p) const { return p < m_; }

  /// Canonical pair list: within a pair the lower point first, pairs
  /// sorted by their lower point.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  BrauerMorphism with_loops(std::size_t k) const;

  bool is_isomorphism() const;
  /// 0-based permutation p with In(i+1) matched to Out(p[i]+1); requires
  /// is_isomorphism().
  std::vector<std::size_t> as_permutation() const;

  bool operator==(const BrauerMorphism& rhs) const {
    return m_ == rhs.m_ && n_ == rhs.n_ && loops_ == rhs.loops_ &&
           partner_ == rhs.partner_;
  }
  bool operator!=(const BrauerMorphism& rhs) const { return !(*this == rhs); }
  int compare(const BrauerMorphism& rhs) const;
  bool operator<(const BrauerMorphism& rhs) const { return compare(rhs) < 0; }

 private:
  BrauerMorphism(std::size_t m, std::size_t n, std::size_t loops,
                 std::vector<std::uint32_t> partner)
      : m_(m), n_(n), loops_(loops), partner_(std::move(partner)) {}

  std::size_t m_ = 0, n_ = 0, loops_ = 0;
  std::vector<std::uint32_t> partner_;
};

/// g after f; creates one loop per closed cycle through the middle object.
BrauerMorphism compose(const BrauerMorphism& g, const BrauerMorphism& f);

/// Stacking; indices of g shifted past f, loop counts add.
BrauerMorphism tensor(const BrauerMorphism& f, const BrauerMorphism& g);

/// (loop-free part, loop count); tensoring the loop endomorphism back in
/// k times recovers f.
std::pair<BrauerMorphism, std::size_t> strip_loops(const BrauerMorphism& f);

/// All loop-free morphisms [m] -> [n], lexicographic in the
/// smallest-unmatched-point-first pairing encoding. Empty when m+n is odd.
std::vector<BrauerMorphism> enumerate_loop_free(std::size_t m, std::size_t n);

/// Text form `m;n;loops;(I1-O1)(I2-O2)`; round-trips bit-exactly through
/// parse_morphism.
std::string encode_morphism(const BrauerMorphism& f);
BrauerMorphism parse_morphism(const std::string& text);

// ---------------------------------------------------------------------------
// Words over the generators i1, e1, b11.

class Word {
 public:
  enum class Kind { GenI, GenE, GenB, Id, Compose, Tensor };

  static Word gen_i();
  static Word gen_e();
  static Word gen_b();
  static Word id(std::size_t k);
  static Word compose(const Word& after, const Word& before);
  static Word tensor(const Word& left, const Word& right);

  Kind kind() const;
  std::size_t id_size() const;  // Id nodes only
  Word first() const;           // Compose: inner (applied first); Tensor: left
  Word second() const;          // Compose: outer; Tensor: right

  std::size_t dom() const;
  std::size_t cod() const;

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

BrauerMorphism evaluate_word(const Word& w);

/// A word evaluating back to f, shaped as
///   loops^(tensor) (x) (beta o (1 (x) e1^p (x) i1^q) o alpha)
/// with alpha, beta built from adjacent transpositions and each loop
/// realized as e1 o i1.
Word decompose_to_word(const BrauerMorphism& f);

// ---------------------------------------------------------------------------
// Presentation relations (B1)-(B5) plus the derived symmetry identities.

struct RelationCase {
  std::string name;
  Word lhs;
  Word rhs;
};

std::vector<RelationCase> relation_cases();

struct RelationReport {
  struct Entry {
    std::string name;
    bool pass;
    std::string lhs;
    std::string rhs;
  };
  std::vector<Entry> entries;
  bool all_pass() const;
};

/// Evaluates both sides of every relation at the diagram level.
RelationReport verify_relations();

}  // namespace braq
