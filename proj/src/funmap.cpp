#include "braq/funmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace braq {

FunMap::FunMap(std::vector<std::vector<std::string>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw std::invalid_argument("FunMap: at least one index factor required");
  for (auto& factor : factors_) {
    std::sort(factor.begin(), factor.end());
    if (std::adjacent_find(factor.begin(), factor.end()) != factor.end())
      throw std::invalid_argument("FunMap: duplicate index key");
  }
}

FunMap FunMap::on(std::vector<std::string> index) {
  return FunMap(std::vector<std::vector<std::string>>{std::move(index)});
}

void FunMap::check_key(const Key& key) const {
  if (key.size() != factors_.size())
    throw std::invalid_argument("FunMap: key arity mismatch");
  for (std::size_t i = 0; i < key.size(); ++i)
    if (!std::binary_search(factors_[i].begin(), factors_[i].end(), key[i]))
      throw std::invalid_argument("FunMap: key '" + key[i] +
                                  "' not in declared index set");
}

const QElement& FunMap::at(const Key& key) const {
  check_key(key);
  static const QElement kZero;
  auto it = entries_.find(key);
  return it == entries_.end() ? kZero : it->second;
}

void FunMap::set(const Key& key, QElement value) {
  check_key(key);
  if (value.is_zero())
    entries_.erase(key);
  else
    entries_[key] = std::move(value);
}

std::vector<FunMap::Key> FunMap::all_keys() const {
  std::vector<Key> keys{{}};
  for (const auto& factor : factors_) {
    std::vector<Key> next;
    for (const auto& prefix : keys)
      for (const auto& value : factor) {
        Key k = prefix;
        k.push_back(value);
        next.push_back(std::move(k));
      }
    keys = std::move(next);
  }
  return keys;
}

FunMap tensor_alpha(const FunMap& F, const FunMap& G, QProduct product) {
  std::vector<std::vector<std::string>> factors = F.factors();
  factors.insert(factors.end(), G.factors().begin(), G.factors().end());
  FunMap out(std::move(factors));
  for (const auto& [ka, va] : F.entries()) {
    for (const auto& [kb, vb] : G.entries()) {
      FunMap::Key key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      QElement value = product == QProduct::Compose ? q_compose(va, vb)
                                                    : q_monoidal(va, vb);
      if (!value.is_zero()) out.set(key, q_add(out.at(key), value));
    }
  }
  return out;
}

RoundTripReport tensor_beta_roundtrip(const FunMap& H) {
  if (H.arity() != 2)
    throw std::invalid_argument("tensor_beta_roundtrip: two factors required");
  const auto& A = H.factors()[0];
  const auto& B = H.factors()[1];

  FunMap rebuilt(H.factors());
  for (const auto& a : A) {
    for (const auto& b : B) {
      const QElement& value = H.at({a, b});
      if (value.is_zero()) continue;
      // chi_a scaled by H(a,b), paired with chi_b carrying the unit on the
      // codomain objects of the value, multiplied out through Q^c.
      FunMap left = FunMap::on(A);
      left.set({a}, value);
      FunMap right = FunMap::on(B);
      right.set({b}, q_compose_identity(value.codomain_objects(),
                                        value.trunc_or(kDefaultTrunc)));
      FunMap elementary = tensor_alpha(left, right, QProduct::Compose);
      for (const auto& [key, term] : elementary.entries())
        rebuilt.set(key, q_add(rebuilt.at(key), term));
    }
  }

  RoundTripReport report;
  if (!(rebuilt == H)) {
    report.pass = false;
    report.detail = "reassembled map differs from input";
  }
  return report;
}

FunMap contract(const FunMap& f, const FunMap& g) {
  if (f.arity() != 2 || g.arity() != 2)
    throw std::invalid_argument("contract: two-factor maps required");
  if (f.factors()[1] != g.factors()[0])
    throw std::invalid_argument("contract: middle index sets differ");
  FunMap out(
      std::vector<std::vector<std::string>>{f.factors()[0], g.factors()[1]});
  for (const auto& [kf, vf] : f.entries()) {
    for (const auto& [kg, vg] : g.entries()) {
      if (kf[1] != kg[0]) continue;
      QElement value = q_compose(vf, vg);
      if (value.is_zero()) continue;
      FunMap::Key key{kf[0], kg[1]};
      out.set(key, q_add(out.at(key), value));
    }
  }
  return out;
}

FunMap scale_right(const FunMap& f, const QElement& s) {
  FunMap out(f.factors());
  for (const auto& [key, value] : f.entries()) out.set(key, q_compose(value, s));
  return out;
}

FunMap scale_left(const QElement& s, const FunMap& g) {
  FunMap out(g.factors());
  for (const auto& [key, value] : g.entries()) out.set(key, q_compose(s, value));
  return out;
}

}  // namespace braq
