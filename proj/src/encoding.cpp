#include "braq/encoding.hpp"

#include <sstream>

namespace braq {

std::string emit_matrix(const RepMatrix& r) {
  std::ostringstream out;
  out << r.mat.rows() << " " << r.mat.cols() << "\n";
  for (std::size_t row = 0; row < r.mat.rows(); ++row) {
    for (std::size_t col = 0; col < r.mat.cols(); ++col) {
      if (col) out << " ";
      out << r.mat.at(row, col).get_str();
    }
    out << "\n";
  }
  return out.str();
}

std::string encode_series(const BoolSeries& s) {
  std::string out = "{";
  bool first = true;
  for (unsigned e : s.exponents()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}@" + std::to_string(s.trunc());
  return out;
}

namespace {

std::string key_text(const QKey& key) {
  if (key.is_diagram()) return encode_morphism(key.as_diagram());
  const RepMatrix& r = key.as_matrix();
  std::string out = "[" + std::to_string(r.mat.rows()) + "x" +
                    std::to_string(r.mat.cols()) + ":";
  for (std::size_t row = 0; row < r.mat.rows(); ++row)
    for (std::size_t col = 0; col < r.mat.cols(); ++col) {
      if (row || col) out += " ";
      out += r.mat.at(row, col).get_str();
    }
  return out + "]";
}

}  // namespace

std::string encode_qelement(const QElement& x) {
  if (x.is_zero()) return "0\n";
  std::ostringstream out;
  for (const auto& [slot, keyed] : x.slots())
    for (const auto& [key, series] : keyed)
      out << "(" << slot.first << "," << slot.second << ") " << key_text(key)
          << " -> " << encode_series(series) << "\n";
  return out.str();
}

std::string encode_funmap(const FunMap& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.factors().size(); ++i) {
    out << "index" << i << ":";
    for (const auto& key : f.factors()[i]) out << " " << key;
    out << "\n";
  }
  for (const auto& [key, value] : f.entries()) {
    out << "entry";
    for (const auto& part : key) out << " " << part;
    out << "\n";
    std::istringstream lines(encode_qelement(value));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
  }
  return out.str();
}

json morphism_to_json(const BrauerMorphism& f) {
  json pairs = json::array();
  for (const auto& [a, b] : f.pairs()) {
    auto label = [&](std::size_t p) {
      return p < f.dom() ? "I" + std::to_string(p + 1)
                         : "O" + std::to_string(p - f.dom() + 1);
    };
    pairs.push_back(json::array({label(a), label(b)}));
  }
  return json{{"m", f.dom()}, {"n", f.cod()}, {"loops", f.loops()},
              {"pairs", pairs}};
}

BrauerMorphism morphism_from_json(const json& j) {
  const std::size_t m = j.at("m").get<std::size_t>();
  const std::size_t n = j.at("n").get<std::size_t>();
  const std::size_t loops = j.at("loops").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto point = [&](const std::string& label) -> std::size_t {
    if (label.size() < 2 || (label[0] != 'I' && label[0] != 'O'))
      throw std::invalid_argument("morphism_from_json: bad point label");
    std::size_t idx = std::stoul(label.substr(1));
    if (idx == 0) throw std::invalid_argument("morphism_from_json: 1-based");
    return label[0] == 'I' ? idx - 1 : m + idx - 1;
  };
  for (const auto& p : j.at("pairs"))
    pairs.emplace_back(point(p.at(0).get<std::string>()),
                       point(p.at(1).get<std::string>()));
  return BrauerMorphism::from_pairing(m, n, pairs, loops);
}

json matrix_to_json(const RepMatrix& r) {
  json rows = json::array();
  for (std::size_t row = 0; row < r.mat.rows(); ++row) {
    json cells = json::array();
    for (std::size_t col = 0; col < r.mat.cols(); ++col)
      cells.push_back(r.mat.at(row, col).get_str());
    rows.push_back(cells);
  }
  return json{{"m", r.m},       {"n", r.n},      {"d", r.d},
              {"rows", r.mat.rows()}, {"cols", r.mat.cols()},
              {"entries", rows}};
}

json series_to_json(const BoolSeries& s) {
  json exps = json::array();
  for (unsigned e : s.exponents()) exps.push_back(e);
  return json{{"trunc", s.trunc()}, {"exponents", exps}};
}

json qelement_to_json(const QElement& x) {
  json terms = json::array();
  for (const auto& [slot, keyed] : x.slots())
    for (const auto& [key, series] : keyed)
      terms.push_back(json{{"m", slot.first},
                           {"n", slot.second},
                           {"key", key_text(key)},
                           {"series", series_to_json(series)}});
  return json{{"terms", terms}};
}

}  // namespace braq
