#include "braq/qseries.hpp"

#include <stdexcept>

namespace braq {

BoolSeries BoolSeries::zero(unsigned trunc) { return BoolSeries(trunc); }

BoolSeries BoolSeries::one(unsigned trunc) { return qpow(0, trunc); }

BoolSeries BoolSeries::qpow(unsigned k, unsigned trunc) {
  BoolSeries s(trunc);
  s.insert(k);
  return s;
}

BoolSeries BoolSeries::geom2(unsigned trunc) {
  BoolSeries s(trunc);
  for (unsigned e = 0; e < trunc; e += 2) s.exps_.insert(e);
  return s;
}

BoolSeries BoolSeries::from_exponents(std::initializer_list<unsigned> exps,
                                      unsigned trunc) {
  BoolSeries s(trunc);
  for (unsigned e : exps) s.insert(e);
  return s;
}

unsigned BoolSeries::min_exponent() const {
  if (exps_.empty())
    throw std::invalid_argument("BoolSeries: min_exponent of zero series");
  return *exps_.begin();
}

void BoolSeries::insert(unsigned e) {
  if (e < trunc_) exps_.insert(e);
}

namespace {

void check_trunc(const BoolSeries& a, const BoolSeries& b) {
  if (a.trunc() != b.trunc())
    throw std::invalid_argument("BoolSeries: mixed truncation degrees");
}

}  // namespace

BoolSeries operator+(const BoolSeries& a, const BoolSeries& b) {
  check_trunc(a, b);
  BoolSeries out = a;
  out.exps_.insert(b.exps_.begin(), b.exps_.end());
  return out;
}

BoolSeries operator*(const BoolSeries& a, const BoolSeries& b) {
  check_trunc(a, b);
  BoolSeries out(a.trunc());
  for (unsigned x : a.exps_)
    for (unsigned y : b.exps_) out.insert(x + y);
  return out;
}

BoolSeries BoolSeries::shifted(unsigned k) const {
  BoolSeries out(trunc_);
  for (unsigned e : exps_) out.insert(e + k);
  return out;
}

BoolSeries BoolSeries::truncated(unsigned new_trunc) const {
  if (new_trunc > trunc_)
    throw std::invalid_argument("BoolSeries: cannot widen truncation");
  BoolSeries out(new_trunc);
  for (unsigned e : exps_) out.insert(e);
  return out;
}

bool BoolSeries::leq(const BoolSeries& b) const { return (*this + b) == b; }

bool BoolSeries::operator<(const BoolSeries& rhs) const {
  if (trunc_ != rhs.trunc_) return trunc_ < rhs.trunc_;
  return exps_ < rhs.exps_;
}

BoolSeries bs_big_sum(const std::vector<BoolSeries>& family, unsigned trunc) {
  BoolSeries out(family.empty() ? trunc : family.front().trunc());
  for (const auto& s : family) out = out + s;
  return out;
}

std::optional<RationalForm> rationalize(const BoolSeries& b) {
  if (b.is_zero()) return std::nullopt;
  const unsigned trunc = b.trunc();
  const unsigned r = b.min_exponent();

  // Exponents off the even chain from r determine the odd part.
  std::optional<unsigned> odd_start;
  for (unsigned e : b.exponents()) {
    if ((e - r) % 2 != 0) {
      odd_start = e;
      break;
    }
  }

  RationalForm form;
  form.r = r;
  form.beta = odd_start.has_value();
  form.s = form.beta ? (*odd_start - r - 1) / 2 : 0;

  BoolSeries expected(trunc);
  for (unsigned e = r; e < trunc; e += 2) expected.insert(e);
  if (form.beta)
    for (unsigned e = *odd_start; e < trunc; e += 2) expected.insert(e);
  if (!(b == expected)) return std::nullopt;

  if (trunc < form.r + 2 * form.s + 5) return std::nullopt;
  return form;
}

}  // namespace braq
