#pragma once

#include <map>
#include <string>
#include <vector>

#include "braq/funmap.hpp"

namespace braq {

struct Field {
  std::string in_key, out_key;
  BrauerMorphism morphism;
};

/// Finite ensemble of fields between declared boundary conditions. Each
/// boundary-condition key carries the object it pins down; a field's
/// morphism must run between the objects of its two keys.
class DiscreteCobordism {
 public:
  void declare_in(const std::string& key, std::size_t object);
  void declare_out(const std::string& key, std::size_t object);
  void add_field(const std::string& in_key, const std::string& out_key,
                 const BrauerMorphism& morphism);

  const std::map<std::string, std::size_t>& in_keys() const { return in_; }
  const std::map<std::string, std::size_t>& out_keys() const { return out_; }
  const std::vector<Field>& fields() const { return fields_; }

 private:
  std::map<std::string, std::size_t> in_, out_;
  std::vector<Field> fields_;
};

/// A state: Q-valued function on in-keys x out-keys.
using State = ProductFunMap;

/// Z_W: each boundary pair accumulates the idempotent sum over its fields
/// of the keyed loop-power form of the field's morphism. Duplicated fields
/// contribute once.
State state_sum(const DiscreteCobordism& W, unsigned trunc = kDefaultTrunc);

/// Composite ensemble along a shared interface: pairs of fields meeting at
/// an interface key compose.
DiscreteCobordism glue(const DiscreteCobordism& W1, const DiscreteCobordism& W2);

/// Well-separated union: boundary keys pair up, fields tensor pairwise.
DiscreteCobordism disjoint_union(const DiscreteCobordism& W,
                                 const DiscreteCobordism& W2);

std::string paired_key(const std::string& a, const std::string& b);

/// Closes the field set under tacking two extra closed components onto a
/// morphism, `depth` times over.
DiscreteCobordism saturate_double_loops(const DiscreteCobordism& W,
                                        std::size_t depth);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> lines;
};

/// Both routes of the gluing law, computed independently and compared
/// exactly: the state sum of the glued ensemble against the contraction of
/// the two state sums.
CheckReport verify_gluing(const DiscreteCobordism& W1,
                          const DiscreteCobordism& W2,
                          unsigned trunc = kDefaultTrunc);

/// Both routes of the disjoint-union law: the state sum of the union,
/// regrouped, against the monoidal tensor of the state sums.
CheckReport verify_disjoint(const DiscreteCobordism& W,
                            const DiscreteCobordism& W2,
                            unsigned trunc = kDefaultTrunc);

/// After double-loop saturation every state-sum series must match
/// q^r (1 + beta q^(2s+1)) / (1 - q^2) within the window the saturation
/// depth can certify; the report tabulates (r, beta, s) per key.
CheckReport verify_rationality(const DiscreteCobordism& W, std::size_t depth,
                               unsigned trunc = kDefaultTrunc);

/// Idempotent sum of state-sum entries at (shared in-key, scenario out-key)
/// over a family of scenario ensembles.
QElement aggregate(
    const std::string& in_key,
    const std::vector<std::pair<std::string, DiscreteCobordism>>& scenarios,
    unsigned trunc = kDefaultTrunc);

struct ExoticReport {
  CheckReport check;
  QElement standard_aggregate;  // matrix-keyed
  QElement exotic_aggregate;    // matrix-keyed
};

/// Aggregate separation of the two-critical-point sphere ensembles: the
/// untwisted side contains an exponent-0 coefficient at the identity shell
/// key, the twisted side (every field carries a closed component) is a
/// multiple of q throughout, so the two aggregates differ.
ExoticReport exotic_demo(unsigned trunc = kDefaultTrunc);

// Scenario file format: `in KEY OBJECT` / `out KEY OBJECT` declaration
// lines, then `field IN_KEY OUT_KEY MORPHISM_ENCODING` lines. '#' starts a
// comment line.
std::string emit_scenario(const DiscreteCobordism& W);
DiscreteCobordism parse_scenario(const std::string& text);

}  // namespace braq
