#pragma once

#include <json.hpp>

#include "strata/atlas.hpp"
#include "strata/classical.hpp"
#include "strata/jordan.hpp"
#include "strata/partition.hpp"
#include "strata/weyl.hpp"

namespace strata {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const Bipartition& bp);
/// {"parts": [...], "labels": {"2": 1}}; "labels" is omitted when empty.
json to_json(const LabeledPartition& nu);
json to_json(const StratumResult& r);
json to_json(const RepLabel& rep);
json to_json(const CarterLabel& c);
json to_json(const SignedCycleType& c);
json to_json(const GroupDescriptor& g);
json to_json(const SpectralDatum& d);

/// Inverse of to_json(SpectralDatum). "char" is 0, a prime, or the string
/// "ODD_PRIME"; an orbit's "kind" defaults to INVOLUTIVE for ids 1 and -1.
/// Throws Error(parse_error) on malformed documents.
SpectralDatum spectral_datum_from_json(const json& doc);
LabeledPartition labeled_partition_from_json(const json& doc);

}  // namespace strata
