#pragma once

// JSON encodings shared by the CLI and the test-suite.
//
//   matrix          {"rows": 2, "cols": 2, "entries": [["0", "1"], ["-2/3", "5"]]}
//   partition       [3, 2, 1]
//   jordan data     [{"eigenvalue": "2", "partition": [3]}, ...]
//   invariants      {"d": 4, "values": [{"i": 2, "j": 0, "t": "2"}, ...]}
//   pair            {"A": matrix, "B": matrix}
//
// Entries are decimal strings "p" or "p/q"; non-reduced input is normalized.

#include "anticomm/commutant.hpp"
#include "anticomm/invariants.hpp"
#include "anticomm/sampler.hpp"

#include "json.hpp"

#include <string_view>
#include <utility>

namespace anticomm {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed text.
Json parse_json(std::string_view text);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const JordanData& data);
JordanData jordan_data_from_json(const Json& j);

Json to_json(const ComponentTriple& t);
ComponentTriple triple_from_json(const Json& j);

Json to_json(const ClassificationReport& rep);
Json to_json(const CommutantBasis& basis);
Json to_json(const DimReport& rep);

Json to_json(const InvariantVector& inv);
InvariantVector invariants_from_json(const Json& j);

Json to_json(const PlanePointMultiset& pts);

/// {"A": ..., "B": ...}; throws ParseError if either key is missing.
std::pair<RatMatrix, RatMatrix> pair_from_json(const Json& j);

}  // namespace anticomm
