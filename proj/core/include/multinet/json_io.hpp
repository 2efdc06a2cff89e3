#pragma once

#include <nlohmann/json.hpp>

#include "multinet/limits.hpp"
#include "multinet/mstructure.hpp"
#include "multinet/program.hpp"

namespace multinet {

// Partition: [["1","3"],["2"]]. PartitionSet: an array of partitions.
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const PartitionSet& P);
Partition partition_from_json(const nlohmann::json& j);
/// Ground taken from the members; `ground` overrides it (needed when empty).
PartitionSet partition_set_from_json(const nlohmann::json& j, const std::vector<ElemId>* ground = nullptr);

// LinkType: {"name","in","out","behavior":[[["i1","o1"],["i2"]],...]}
nlohmann::json to_json(const LinkType& t);
LinkType link_type_from_json(const nlohmann::json& j);

/// {"vertices":[{"id","label"}],"edges":[{"type","inputs","outputs"}],"signature":[...]}.
/// Only non-builtin link types are listed under "signature".
nlohmann::json to_json(const MStructure& S);
/// Girard names (G_u_v, Gdual_u_v) resolve without a signature entry.
/// Throws DomainError on malformed input.
MStructure structure_from_json(const nlohmann::json& j, const Limits& limits = {});

/// [{"edge":k,"type":t,"partition":[[...]]}] on actual vertices.
nlohmann::json switching_to_json(const MStructure& S, const Switching& sigma);
nlohmann::json to_json(const UndirectedHypergraph& U);

nlohmann::json to_json(const ExecutionState& state);

}  // namespace multinet
