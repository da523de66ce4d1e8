#pragma once

#include <optional>
#include <set>
#include <vector>

namespace braq {

inline constexpr unsigned kDefaultTrunc = 64;

/// Truncated power series over the Boolean semiring: a set of exponents
/// below the truncation degree. Addition is union (idempotent),
/// multiplication the truncated Minkowski sum.
class BoolSeries {
 public:
  explicit BoolSeries(unsigned trunc = kDefaultTrunc) : trunc_(trunc) {}

  static BoolSeries zero(unsigned trunc = kDefaultTrunc);
  static BoolSeries one(unsigned trunc = kDefaultTrunc);
  static BoolSeries qpow(unsigned k, unsigned trunc = kDefaultTrunc);
  /// 1/(1-q^2) = 1 + q^2 + q^4 + ... truncated.
  static BoolSeries geom2(unsigned trunc = kDefaultTrunc);
  static BoolSeries from_exponents(std::initializer_list<unsigned> exps,
                                   unsigned trunc = kDefaultTrunc);

  unsigned trunc() const { return trunc_; }
  const std::set<unsigned>& exponents() const { return exps_; }
  bool is_zero() const { return exps_.empty(); }
  bool contains(unsigned e) const { return exps_.count(e) != 0; }
  unsigned min_exponent() const;  // requires nonzero

  void insert(unsigned e);  // no-op at or above trunc

  friend BoolSeries operator+(const BoolSeries& a, const BoolSeries& b);
  friend BoolSeries operator*(const BoolSeries& a, const BoolSeries& b);
  BoolSeries shifted(unsigned k) const;  // times q^k
  /// Intersection with [0, new_trunc); new_trunc <= trunc.
  BoolSeries truncated(unsigned new_trunc) const;

  /// Canonical order of the idempotent semiring: a <= b iff a + b = b.
  bool leq(const BoolSeries& b) const;

  bool operator==(const BoolSeries& rhs) const {
    return trunc_ == rhs.trunc_ && exps_ == rhs.exps_;
  }
  bool operator!=(const BoolSeries& rhs) const { return !(*this == rhs); }
  bool operator<(const BoolSeries& rhs) const;

 private:
  unsigned trunc_;
  std::set<unsigned> exps_;
};

BoolSeries bs_big_sum(const std::vector<BoolSeries>& family,
                      unsigned trunc = kDefaultTrunc);

/// Parameters of b = q^r (1 + beta q^(2s+1)) / (1 - q^2).
struct RationalForm {
  unsigned r = 0;
  bool beta = false;
  unsigned s = 0;
};

/// Matches b against the truncation of q^r (1 + beta q^(2s+1)) / (1-q^2).
/// Absent unless the match is exact and the truncation window is wide
/// enough to be conclusive (trunc >= r + 2s + 5).
std::optional<RationalForm> rationalize(const BoolSeries& b);

}  // namespace braq
