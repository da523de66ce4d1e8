#include "braq/qelement.hpp"

#include <stdexcept>

namespace braq {

QKey QKey::diagram(const BrauerMorphism& f) {
  if (f.loops() != 0)
    throw std::invalid_argument("QKey: diagram keys must be loop-free");
  return QKey(std::variant<BrauerMorphism, RepMatrix>(std::in_place_index<0>, f));
}

QKey QKey::matrix(const RepMatrix& mat) {
  return QKey(
      std::variant<BrauerMorphism, RepMatrix>(std::in_place_index<1>, mat));
}

bool QKey::operator==(const QKey& rhs) const {
  if (v_.index() != rhs.v_.index()) return false;
  if (is_diagram()) return as_diagram() == rhs.as_diagram();
  return as_matrix() == rhs.as_matrix();
}

bool QKey::operator<(const QKey& rhs) const {
  if (v_.index() != rhs.v_.index()) return v_.index() < rhs.v_.index();
  if (is_diagram()) return as_diagram() < rhs.as_diagram();
  return as_matrix() < rhs.as_matrix();
}

void QElement::add_term(ObjectPair slot, const QKey& key,
                        const BoolSeries& series) {
  if (series.is_zero()) return;
  auto& keyed = slots_[slot];
  auto it = keyed.find(key);
  if (it == keyed.end())
    keyed.emplace(key, series);
  else
    it->second = it->second + series;
}

const BoolSeries* QElement::find(ObjectPair slot, const QKey& key) const {
  auto sit = slots_.find(slot);
  if (sit == slots_.end()) return nullptr;
  auto kit = sit->second.find(key);
  return kit == sit->second.end() ? nullptr : &kit->second;
}

std::set<std::size_t> QElement::domain_objects() const {
  std::set<std::size_t> out;
  for (const auto& [slot, keyed] : slots_) out.insert(slot.first);
  return out;
}

std::set<std::size_t> QElement::codomain_objects() const {
  std::set<std::size_t> out;
  for (const auto& [slot, keyed] : slots_) out.insert(slot.second);
  return out;
}

unsigned QElement::trunc_or(unsigned fallback) const {
  for (const auto& [slot, keyed] : slots_)
    for (const auto& [key, series] : keyed) return series.trunc();
  return fallback;
}

QElement q_from_morphism(const BrauerMorphism& f, unsigned trunc) {
  auto [base, k] = strip_loops(f);
  QElement out;
  out.add_term({f.dom(), f.cod()}, QKey::diagram(base),
               BoolSeries::qpow(static_cast<unsigned>(k), trunc));
  return out;
}

QElement q_add(const QElement& x, const QElement& y) {
  QElement out = x;
  for (const auto& [slot, keyed] : y.slots())
    for (const auto& [key, series] : keyed) out.add_term(slot, key, series);
  return out;
}

QElement q_big_sum(const std::vector<QElement>& family) {
  QElement out;
  for (const auto& x : family) out = q_add(out, x);
  return out;
}

bool q_leq(const QElement& x, const QElement& y) { return q_add(x, y) == y; }

QElement q_compose(const QElement& x, const QElement& y) {
  QElement out;
  for (const auto& [slot_x, keyed_x] : x.slots()) {
    for (const auto& [slot_y, keyed_y] : y.slots()) {
      if (slot_x.second != slot_y.first) continue;  // middle objects differ
      for (const auto& [key_x, series_x] : keyed_x) {
        for (const auto& [key_y, series_y] : keyed_y) {
          BrauerMorphism composite =
              compose(key_y.as_diagram(), key_x.as_diagram());
          auto [base, k] = strip_loops(composite);
          BoolSeries series =
              (series_x * series_y).shifted(static_cast<unsigned>(k));
          out.add_term({slot_x.first, slot_y.second}, QKey::diagram(base),
                       series);
        }
      }
    }
  }
  return out;
}

QElement q_monoidal(const QElement& x, const QElement& y) {
  QElement out;
  for (const auto& [slot_x, keyed_x] : x.slots())
    for (const auto& [slot_y, keyed_y] : y.slots())
      for (const auto& [key_x, series_x] : keyed_x)
        for (const auto& [key_y, series_y] : keyed_y)
          out.add_term(
              {slot_x.first + slot_y.first, slot_x.second + slot_y.second},
              QKey::diagram(tensor(key_x.as_diagram(), key_y.as_diagram())),
              series_x * series_y);
  return out;
}

QElement q_compose_identity(const std::set<std::size_t>& objects,
                            unsigned trunc) {
  QElement out;
  for (std::size_t n : objects)
    out.add_term({n, n}, QKey::diagram(BrauerMorphism::identity(n)),
                 BoolSeries::one(trunc));
  return out;
}

QElement q_monoidal_identity(unsigned trunc) {
  QElement out;
  out.add_term({0, 0}, QKey::diagram(BrauerMorphism::identity(0)),
               BoolSeries::one(trunc));
  return out;
}

namespace {

// Is target == scale^k * base for some k >= 1?
bool is_positive_scale_multiple(const RepMatrix& target, const RepMatrix& base,
                                const Rational& scale) {
  if (target.m != base.m || target.n != base.n || target.d != base.d)
    return false;
  const RatMatrix& t = target.mat;
  const RatMatrix& b = base.mat;
  RatMatrix scaled = b;
  // |scale| != 1, so the iteration either hits the target or strictly
  // drifts away in magnitude at every nonzero entry; bound by the number
  // of candidate powers that can matter at desk scale.
  for (int k = 1; k <= 512; ++k) {
    scaled = scaled.scaled(scale);
    if (scaled == t) return true;
    bool overshot = true;
    for (std::size_t r = 0; r < t.rows() && overshot; ++r)
      for (std::size_t c = 0; c < t.cols() && overshot; ++c) {
        const Rational& sv = scaled.at(r, c);
        if (sv == 0) continue;
        if (abs(sv) <= abs(t.at(r, c))) overshot = false;
      }
    if (overshot) return false;
  }
  return false;
}

}  // namespace

std::vector<RepMatrix> minimal_shell(const std::vector<RepMatrix>& generators,
                                     const Rational& scale) {
  if (scale == 0 || scale == 1 || scale == -1)
    throw std::invalid_argument("minimal_shell: scale must avoid {0,1,-1}");
  // Deduplicate; the shell of a generating set depends only on the set.
  std::vector<RepMatrix> gens;
  for (const auto& g : generators) {
    if (g.mat.is_zero())
      throw std::invalid_argument("minimal_shell: generators must be nonzero");
    bool dup = false;
    for (const auto& h : gens)
      if (h == g) {
        dup = true;
        break;
      }
    if (!dup) gens.push_back(g);
  }
  std::vector<RepMatrix> shell;
  for (const auto& g : gens) {
    bool reducible = false;
    for (const auto& h : gens) {
      if (is_positive_scale_multiple(g, h, scale)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) shell.push_back(g);
  }
  return shell;
}

QElement to_matrix_keys(const QElement& x, const DualityStructure& D) {
  QElement out;
  for (const auto& [slot, keyed] : x.slots())
    for (const auto& [key, series] : keyed)
      out.add_term(slot, QKey::matrix(rep(D, key.as_diagram())), series);
  return out;
}

const std::vector<RepMatrix>& ShellIndex::shell(std::size_t m, std::size_t n) {
  auto it = cache_.find({m, n});
  if (it != cache_.end()) return it->second;
  std::vector<RepMatrix> images;
  for (const auto& phi : enumerate_loop_free(m, n))
    images.push_back(rep(D_, phi));
  return cache_
      .emplace(ObjectPair{m, n}, minimal_shell(images, D_.loop_value()))
      .first->second;
}

std::pair<std::size_t, RepMatrix> ShellIndex::decompose(
    const RepMatrix& image) {
  const Rational lam = D_.loop_value();
  for (const auto& base : shell(image.m, image.n)) {
    RatMatrix scaled = base.mat;
    for (std::size_t k = 0; k <= 512; ++k) {
      if (scaled == image.mat) return {k, base};
      scaled = scaled.scaled(lam);
    }
  }
  throw std::invalid_argument(
      "ShellIndex: matrix is not a loop power times a shell element");
}

QElement q_compose_matrix(const QElement& x, const QElement& y,
                          ShellIndex& index) {
  QElement out;
  for (const auto& [slot_x, keyed_x] : x.slots()) {
    for (const auto& [slot_y, keyed_y] : y.slots()) {
      if (slot_x.second != slot_y.first) continue;
      for (const auto& [key_x, series_x] : keyed_x) {
        for (const auto& [key_y, series_y] : keyed_y) {
          const RepMatrix& a = key_x.as_matrix();
          const RepMatrix& b = key_y.as_matrix();
          RepMatrix product{a.m, b.n, a.d, b.mat * a.mat};
          auto [k, base] = index.decompose(product);
          BoolSeries series =
              (series_x * series_y).shifted(static_cast<unsigned>(k));
          out.add_term({slot_x.first, slot_y.second}, QKey::matrix(base),
                       series);
        }
      }
    }
  }
  return out;
}

QElement q_monoidal_matrix(const QElement& x, const QElement& y) {
  QElement out;
  for (const auto& [slot_x, keyed_x] : x.slots())
    for (const auto& [slot_y, keyed_y] : y.slots())
      for (const auto& [key_x, series_x] : keyed_x)
        for (const auto& [key_y, series_y] : keyed_y) {
          const RepMatrix& a = key_x.as_matrix();
          const RepMatrix& b = key_y.as_matrix();
          RepMatrix prod{a.m + b.m, a.n + b.n, a.d, a.mat.kronecker(b.mat)};
          out.add_term(
              {slot_x.first + slot_y.first, slot_x.second + slot_y.second},
              QKey::matrix(prod), series_x * series_y);
        }
  return out;
}

}  // namespace braq
