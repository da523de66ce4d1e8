#include "braq/rep.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace braq {

namespace {

constexpr std::size_t kDimLimit = 4096;

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    value *= base;
    if (value > kDimLimit)
      throw std::invalid_argument(
          "rep: tensor power exceeds the dense size limit d^k <= 4096");
  }
  return value;
}

}  // namespace

DualityStructure make_duality(const RatMatrix& mat_unit) {
  if (mat_unit.rows() != mat_unit.cols())
    throw std::invalid_argument("make_duality: matrix must be square");
  if (mat_unit.rows() < 2)
    throw std::invalid_argument("make_duality: dimension must be >= 2");
  if (!mat_unit.is_symmetric())
    throw std::invalid_argument("make_duality: matrix must be symmetric");
  auto inv = mat_unit.inverse();
  if (!inv)
    throw std::invalid_argument("make_duality: matrix must be invertible");
  return DualityStructure{mat_unit.rows(), mat_unit, std::move(*inv)};
}

DualityStructure example_structure() {
  RatMatrix u(2, 2);
  u.at(0, 0) = 1;
  u.at(0, 1) = 1;
  u.at(1, 0) = 1;
  u.at(1, 1) = 0;
  return make_duality(u);
}

int RepMatrix::compare(const RepMatrix& rhs) const {
  if (m != rhs.m) return m < rhs.m ? -1 : 1;
  if (n != rhs.n) return n < rhs.n ? -1 : 1;
  if (d != rhs.d) return d < rhs.d ? -1 : 1;
  return mat.compare(rhs.mat);
}

namespace {

// Y(i1): column of Mat(i) entries, row index (j,k) lexicographic.
RatMatrix unit_matrix(const DualityStructure& D) {
  const std::size_t d = D.dim;
  RatMatrix out(d * d, 1);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      out.at(j * d + k, 0) = D.mat_unit.at(j, k);
  return out;
}

// Y(e1): row of Mat(e) entries.
RatMatrix counit_matrix(const DualityStructure& D) {
  const std::size_t d = D.dim;
  RatMatrix out(1, d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      out.at(0, j * d + k) = D.mat_counit.at(j, k);
  return out;
}

// Y(b11): v (x) w -> w (x) v on basis vectors.
RatMatrix swap_matrix(std::size_t d) {
  RatMatrix out(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) out.at(k * d + j, j * d + k) = 1;
  return out;
}

}  // namespace

RatMatrix eval_word_matrix(const DualityStructure& D, const Word& w) {
  switch (w.kind()) {
    case Word::Kind::GenI:
      return unit_matrix(D);
    case Word::Kind::GenE:
      return counit_matrix(D);
    case Word::Kind::GenB:
      return swap_matrix(D.dim);
    case Word::Kind::Id:
      return RatMatrix::identity(checked_power(D.dim, w.id_size()));
    case Word::Kind::Compose:
      return eval_word_matrix(D, w.second()) * eval_word_matrix(D, w.first());
    case Word::Kind::Tensor:
      return eval_word_matrix(D, w.first())
          .kronecker(eval_word_matrix(D, w.second()));
  }
  throw std::logic_error("eval_word_matrix: unreachable");
}

RepMatrix rep(const DualityStructure& D, const BrauerMorphism& f) {
  checked_power(D.dim, f.dom());
  checked_power(D.dim, f.cod());
  RatMatrix mat = eval_word_matrix(D, decompose_to_word(f));
  return RepMatrix{f.dom(), f.cod(), D.dim, std::move(mat)};
}

RepMatrix rep_direct(const DualityStructure& D, const BrauerMorphism& f) {
  const std::size_t d = D.dim, m = f.dom(), n = f.cod();
  const std::size_t rows = checked_power(d, n), cols = checked_power(d, m);
  const auto pair_list = f.pairs();

  Rational loop_factor = 1;
  for (std::size_t k = 0; k < f.loops(); ++k) loop_factor *= D.loop_value();

  RatMatrix out(rows, cols);
  std::vector<std::size_t> in_digits(m), out_digits(n);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t rr = r;
    for (std::size_t j = n; j-- > 0;) {
      out_digits[j] = rr % d;
      rr /= d;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t cc = c;
      for (std::size_t i = m; i-- > 0;) {
        in_digits[i] = cc % d;
        cc /= d;
      }
      Rational entry = loop_factor;
      for (const auto& [a, b] : pair_list) {
        if (b < m) {
          entry *= D.mat_counit.at(in_digits[a], in_digits[b]);
        } else if (a >= m) {
          entry *= D.mat_unit.at(out_digits[a - m], out_digits[b - m]);
        } else if (in_digits[a] != out_digits[b - m]) {
          entry = 0;
        }
        if (entry == 0) break;
      }
      out.at(r, c) = entry;
    }
  }
  return RepMatrix{m, n, d, std::move(out)};
}

RelationReport verify_relations_matrix(const DualityStructure& D) {
  RelationReport report;
  for (const auto& rc : relation_cases()) {
    RatMatrix l = eval_word_matrix(D, rc.lhs);
    RatMatrix r = eval_word_matrix(D, rc.rhs);
    RelationReport::Entry entry;
    entry.name = rc.name;
    entry.pass = (l == r);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

LoopFaithfulReport check_loop_faithful(const DualityStructure& D,
                                       std::size_t max_size,
                                       std::size_t max_loops) {
  LoopFaithfulReport report;
  for (std::size_t m = 0; m <= max_size; ++m) {
    for (std::size_t n = 0; m + n <= max_size; ++n) {
      if ((m + n) % 2 != 0) continue;
      // Images within one Hom-set; distinct (m,n) have distinct shapes.
      std::map<RatMatrix, std::pair<std::size_t, BrauerMorphism>> seen;
      for (const auto& base : enumerate_loop_free(m, n)) {
        for (std::size_t loops = 0; loops <= max_loops; ++loops) {
          BrauerMorphism phi = base.with_loops(loops);
          RatMatrix image = rep(D, phi).mat;
          auto [it, inserted] =
              seen.try_emplace(std::move(image), loops, phi);
          if (!inserted && it->second.first != loops) {
            report.ok = false;
            report.counterexample_lhs = encode_morphism(it->second.second);
            report.counterexample_rhs = encode_morphism(phi);
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace braq
