#include "braq/tft.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braq {

void DiscreteCobordism::declare_in(const std::string& key, std::size_t object) {
  auto [it, inserted] = in_.emplace(key, object);
  if (!inserted && it->second != object)
    throw std::invalid_argument("declare_in: key '" + key +
                                "' redeclared with a different object");
}

void DiscreteCobordism::declare_out(const std::string& key,
                                    std::size_t object) {
  auto [it, inserted] = out_.emplace(key, object);
  if (!inserted && it->second != object)
    throw std::invalid_argument("declare_out: key '" + key +
                                "' redeclared with a different object");
}

void DiscreteCobordism::add_field(const std::string& in_key,
                                  const std::string& out_key,
                                  const BrauerMorphism& morphism) {
  auto in_it = in_.find(in_key);
  auto out_it = out_.find(out_key);
  if (in_it == in_.end())
    throw std::invalid_argument("add_field: unknown in key '" + in_key + "'");
  if (out_it == out_.end())
    throw std::invalid_argument("add_field: unknown out key '" + out_key + "'");
  if (morphism.dom() != in_it->second || morphism.cod() != out_it->second)
    throw std::invalid_argument(
        "add_field: morphism objects do not match the boundary keys");
  fields_.push_back(Field{in_key, out_key, morphism});
}

namespace {

std::vector<std::string> key_list(const std::map<std::string, std::size_t>& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (const auto& [key, object] : m) out.push_back(key);
  return out;
}

}  // namespace

State state_sum(const DiscreteCobordism& W, unsigned trunc) {
  State z(std::vector<std::vector<std::string>>{key_list(W.in_keys()),
                                                key_list(W.out_keys())});
  for (const auto& field : W.fields()) {
    FunMap::Key key{field.in_key, field.out_key};
    z.set(key, q_add(z.at(key), q_from_morphism(field.morphism, trunc)));
  }
  return z;
}

DiscreteCobordism glue(const DiscreteCobordism& W1,
                       const DiscreteCobordism& W2) {
  if (W1.out_keys() != W2.in_keys())
    throw std::invalid_argument(
        "glue: interface keys or objects do not match");
  DiscreteCobordism out;
  for (const auto& [key, object] : W1.in_keys()) out.declare_in(key, object);
  for (const auto& [key, object] : W2.out_keys()) out.declare_out(key, object);
  for (const auto& f : W1.fields())
    for (const auto& g : W2.fields()) {
      if (f.out_key != g.in_key) continue;
      out.add_field(f.in_key, g.out_key, compose(g.morphism, f.morphism));
    }
  return out;
}

std::string paired_key(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

DiscreteCobordism disjoint_union(const DiscreteCobordism& W,
                                 const DiscreteCobordism& W2) {
  for (const auto& [key, object] : W.in_keys())
    if (W2.in_keys().count(key))
      throw std::invalid_argument("disjoint_union: in key sets overlap");
  for (const auto& [key, object] : W.out_keys())
    if (W2.out_keys().count(key))
      throw std::invalid_argument("disjoint_union: out key sets overlap");

  DiscreteCobordism out;
  for (const auto& [a, ma] : W.in_keys())
    for (const auto& [b, mb] : W2.in_keys())
      out.declare_in(paired_key(a, b), ma + mb);
  for (const auto& [a, na] : W.out_keys())
    for (const auto& [b, nb] : W2.out_keys())
      out.declare_out(paired_key(a, b), na + nb);
  for (const auto& f : W.fields())
    for (const auto& g : W2.fields())
      out.add_field(paired_key(f.in_key, g.in_key),
                    paired_key(f.out_key, g.out_key),
                    tensor(f.morphism, g.morphism));
  return out;
}

DiscreteCobordism saturate_double_loops(const DiscreteCobordism& W,
                                        std::size_t depth) {
  DiscreteCobordism out;
  for (const auto& [key, object] : W.in_keys()) out.declare_in(key, object);
  for (const auto& [key, object] : W.out_keys()) out.declare_out(key, object);
  const BrauerMorphism two_loops = tensor(BrauerMorphism::loop(),
                                          BrauerMorphism::loop());
  for (const auto& field : W.fields()) {
    BrauerMorphism current = field.morphism;
    out.add_field(field.in_key, field.out_key, current);
    for (std::size_t j = 0; j < depth; ++j) {
      current = tensor(current, two_loops);
      out.add_field(field.in_key, field.out_key, current);
    }
  }
  return out;
}

CheckReport verify_gluing(const DiscreteCobordism& W1,
                          const DiscreteCobordism& W2, unsigned trunc) {
  CheckReport report;
  State glued = state_sum(glue(W1, W2), trunc);
  State contracted = contract(state_sum(W1, trunc), state_sum(W2, trunc));
  report.pass = (glued == contracted);
  std::ostringstream line;
  line << "gluing: " << W1.fields().size() << "x" << W2.fields().size()
       << " fields across " << W1.out_keys().size() << " interface keys -> "
       << (report.pass ? "equal" : "UNEQUAL");
  report.lines.push_back(line.str());
  return report;
}

CheckReport verify_disjoint(const DiscreteCobordism& W,
                            const DiscreteCobordism& W2, unsigned trunc) {
  CheckReport report;
  State union_state = state_sum(disjoint_union(W, W2), trunc);
  State left = state_sum(W, trunc);
  State right = state_sum(W2, trunc);
  State product = tensor_alpha(left, right, QProduct::Monoidal);

  // rho regroups ((a,b),(a',b')) as (a,a',b,b').
  bool equal = true;
  for (const auto& [a, ma] : W.in_keys())
    for (const auto& [a2, ma2] : W2.in_keys())
      for (const auto& [b, nb] : W.out_keys())
        for (const auto& [b2, nb2] : W2.out_keys()) {
          const QElement& lhs =
              union_state.at({paired_key(a, a2), paired_key(b, b2)});
          const QElement& rhs = product.at({a, b, a2, b2});
          if (!(lhs == rhs)) equal = false;
        }
  report.pass = equal;
  std::ostringstream line;
  line << "disjoint union: " << W.fields().size() << "+" << W2.fields().size()
       << " fields -> " << (equal ? "equal" : "UNEQUAL");
  report.lines.push_back(line.str());
  return report;
}

CheckReport verify_rationality(const DiscreteCobordism& W, std::size_t depth,
                               unsigned trunc) {
  CheckReport report;

  std::size_t max_loops = 0;
  for (const auto& field : W.fields())
    max_loops = std::max(max_loops, field.morphism.loops());
  if (2 * depth + max_loops + 2 > trunc) {
    report.pass = false;
    report.lines.push_back(
        "rationality: saturation precondition unmet (need 2*depth + max "
        "loops + 2 <= truncation)");
    return report;
  }
  // Within [0, 2*depth+1) every saturated chain is complete, so the
  // series there must agree with a truncated rational of the universal
  // denominator 1 - q^2.
  const unsigned window =
      std::min<unsigned>(trunc, static_cast<unsigned>(2 * depth + 1));

  State z = state_sum(saturate_double_loops(W, depth), trunc);
  for (const auto& [key, value] : z.entries()) {
    for (const auto& [slot, keyed] : value.slots()) {
      for (const auto& [qkey, series] : keyed) {
        auto form = rationalize(series.truncated(window));
        std::ostringstream line;
        line << "(" << key[0] << "," << key[1] << ") "
             << encode_morphism(qkey.as_diagram()) << " -> ";
        if (form) {
          line << "r=" << form->r << " beta=" << (form->beta ? 1 : 0)
               << " s=" << form->s;
        } else {
          line << "NOT RATIONAL in window " << window;
          report.pass = false;
        }
        report.lines.push_back(line.str());
      }
    }
  }
  return report;
}

QElement aggregate(
    const std::string& in_key,
    const std::vector<std::pair<std::string, DiscreteCobordism>>& scenarios,
    unsigned trunc) {
  std::vector<QElement> terms;
  for (const auto& [out_key, W] : scenarios) {
    if (!W.in_keys().count(in_key))
      throw std::invalid_argument(
          "aggregate: scenario does not declare the shared in key");
    terms.push_back(state_sum(W, trunc).at({in_key, out_key}));
  }
  return q_big_sum(terms);
}

namespace {

const char* shell_label(const RepMatrix& key, const DualityStructure& D) {
  if (key.mat == RatMatrix::identity(D.dim * D.dim)) return "identity";
  RepMatrix swap = rep(D, BrauerMorphism::braiding(1, 1));
  if (key.mat == swap.mat) return "swap";
  return "cup-cap";
}

std::string series_text(const BoolSeries& s) {
  std::string out = "{";
  bool first = true;
  for (unsigned e : s.exponents()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

void describe_aggregate(const QElement& agg, const DualityStructure& D,
                        const std::string& side, CheckReport& report) {
  for (const auto& [slot, keyed] : agg.slots())
    for (const auto& [key, series] : keyed)
      report.lines.push_back(side + " " + shell_label(key.as_matrix(), D) +
                             ": " + series_text(series));
}

bool has_constant_term_at_identity(const QElement& agg,
                                   const DualityStructure& D) {
  RepMatrix id{2, 2, D.dim, RatMatrix::identity(D.dim * D.dim)};
  const BoolSeries* series = agg.find({2, 2}, QKey::matrix(id));
  return series != nullptr && series->contains(0);
}

bool all_exponents_positive(const QElement& agg) {
  for (const auto& [slot, keyed] : agg.slots())
    for (const auto& [key, series] : keyed)
      if (series.is_zero() || series.min_exponent() == 0) return false;
  return true;
}

}  // namespace

ExoticReport exotic_demo(unsigned trunc) {
  const DualityStructure D = example_structure();
  const BrauerMorphism id2 = BrauerMorphism::identity(2);
  const BrauerMorphism swap = BrauerMorphism::braiding(1, 1);
  const BrauerMorphism cupcap =
      compose(BrauerMorphism::unit(1), BrauerMorphism::counit(1));
  const BrauerMorphism lam = BrauerMorphism::loop();

  // Untwisted side: the product ensemble contains the cylinder field with
  // the identity morphism; further fields are unconstrained.
  DiscreteCobordism std1;
  std1.declare_in("fS", 2);
  std1.declare_out("g1", 2);
  std1.add_field("fS", "g1", id2);
  std1.add_field("fS", "g1", tensor(swap, lam));
  DiscreteCobordism std2;
  std2.declare_in("fS", 2);
  std2.declare_out("g2", 2);
  std2.add_field("fS", "g2", cupcap);
  std2.add_field("fS", "g2", tensor(id2, tensor(lam, lam)));

  // Twisted side: every morphism carries at least one closed component
  // (the absolute-index constraint), so every series is a multiple of q.
  DiscreteCobordism exo1;
  exo1.declare_in("fS", 2);
  exo1.declare_out("h1", 2);
  exo1.add_field("fS", "h1", tensor(id2, lam));
  exo1.add_field("fS", "h1", tensor(swap, tensor(lam, tensor(lam, lam))));
  DiscreteCobordism exo2;
  exo2.declare_in("fS", 2);
  exo2.declare_out("h2", 2);
  exo2.add_field("fS", "h2", tensor(cupcap, lam));
  exo2.add_field("fS", "h2", tensor(id2, tensor(lam, lam)));

  ExoticReport report;
  QElement std_agg =
      aggregate("fS", {{"g1", std1}, {"g2", std2}}, trunc);
  QElement exo_agg =
      aggregate("fS", {{"h1", exo1}, {"h2", exo2}}, trunc);
  report.standard_aggregate = to_matrix_keys(std_agg, D);
  report.exotic_aggregate = to_matrix_keys(exo_agg, D);

  describe_aggregate(report.standard_aggregate, D, "standard", report.check);
  describe_aggregate(report.exotic_aggregate, D, "exotic", report.check);

  const bool std_const = has_constant_term_at_identity(report.standard_aggregate, D);
  const bool exo_positive = all_exponents_positive(report.exotic_aggregate);
  const bool distinct = !(report.standard_aggregate == report.exotic_aggregate);

  report.check.lines.push_back(
      std::string("standard aggregate has exponent 0 at the identity key: ") +
      (std_const ? "yes" : "NO"));
  report.check.lines.push_back(
      std::string("exotic aggregate has every exponent >= 1: ") +
      (exo_positive ? "yes" : "NO"));
  // 1 + a = q * a' is unsolvable over Boolean series: the left side always
  // carries exponent 0, the right side never does.
  report.check.lines.push_back(
      std::string("verdict: ") + (distinct ? "distinct" : "NOT distinct"));
  report.check.pass = std_const && exo_positive && distinct;
  return report;
}

std::string emit_scenario(const DiscreteCobordism& W) {
  std::ostringstream out;
  for (const auto& [key, object] : W.in_keys())
    out << "in " << key << " " << object << "\n";
  for (const auto& [key, object] : W.out_keys())
    out << "out " << key << " " << object << "\n";
  for (const auto& field : W.fields())
    out << "field " << field.in_key << " " << field.out_key << " "
        << encode_morphism(field.morphism) << "\n";
  return out.str();
}

DiscreteCobordism parse_scenario(const std::string& text) {
  DiscreteCobordism W;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string tag;
    words >> tag;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("parse_scenario: line " +
                                  std::to_string(lineno) + ": " + why);
    };
    if (tag == "in" || tag == "out") {
      std::string key;
      std::size_t object = 0;
      if (!(words >> key >> object)) fail("expected KEY OBJECT");
      if (tag == "in")
        W.declare_in(key, object);
      else
        W.declare_out(key, object);
    } else if (tag == "field") {
      std::string in_key, out_key, enc;
      if (!(words >> in_key >> out_key >> enc))
        fail("expected IN_KEY OUT_KEY ENCODING");
      W.add_field(in_key, out_key, parse_morphism(enc));
    } else {
      fail("unknown tag '" + tag + "'");
    }
  }
  return W;
}

}  // namespace braq
