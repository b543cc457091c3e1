#pragma once

#include <json.hpp>

#include "bcnqkit/dimensions.hpp"
#include "bcnqkit/operators.hpp"
#include "bcnqkit/params.hpp"
#include "bcnqkit/partition.hpp"
#include "bcnqkit/sympoly.hpp"

namespace bcnq {

using json = nlohmann::ordered_json;

/// Partitions serialize as JSON arrays of integers, most significant part
/// first, zero-padded to context_n.
json to_json(const Partition& lambda);
Partition partition_from_json(const json& j, int context_n);

/// {"basis": ..., "n": n, "terms": [{"mu": [...], "coeff": "p/q"}]},
/// terms sorted graded-lex.
json to_json(const SymPoly& p);

/// {"family", "top", "order": [...], "rows": [[...], ...]} with Rat strings.
json to_json(const OperatorMatrix& m);

json to_json(const DimRecord& rec);

std::string dim_records_to_csv(const std::vector<DimRecord>& records);
std::string dim_records_to_table(const std::vector<DimRecord>& records);

}  // namespace bcnq
