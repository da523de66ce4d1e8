#pragma once

#include <json.hpp>

#include <string>

#include "braq/funmap.hpp"
#include "braq/qelement.hpp"
#include "braq/rep.hpp"

namespace braq {

using json = nlohmann::json;

/// Dims header `rows cols`, then one line per row of exact fraction
/// strings.
std::string emit_matrix(const RepMatrix& r);

/// `{e1,e2,...}@N`: sorted exponents and the truncation degree.
std::string encode_series(const BoolSeries& s);

/// Nested text form of a Q element, one `  (m,n) KEY -> SERIES` line per
/// coordinate, keyed by the morphism text encoding (diagram mode) or a
/// flattened matrix (matrix mode).
std::string encode_qelement(const QElement& x);

/// Index declaration block, then `KEY... -> QELEMENT` entries.
std::string encode_funmap(const FunMap& f);

json morphism_to_json(const BrauerMorphism& f);
BrauerMorphism morphism_from_json(const json& j);
json matrix_to_json(const RepMatrix& r);
json series_to_json(const BoolSeries& s);
json qelement_to_json(const QElement& x);

}  // namespace braq
