#pragma once

#include <string>

#include <json.hpp>

#include "drgmd/families.hpp"
#include "drgmd/partitions.hpp"
#include "drgmd/resolver.hpp"

namespace drg {

using Json = nlohmann::ordered_json;

Json to_json(const Subspace& s);
Json to_json(const KSubset& s);
Json to_json(const Vertex& v);
Json to_json(const VectorPartition& p);
Json to_json(const PartitionReport& r);
Json params_to_json(Family family, const GraphParams& params);

// Parsers report problems as Error(Malformed) whose message starts with the
// JSON location, e.g. "/landmarks/2/basis: ...".
Subspace subspace_from_json(const Json& j, const std::string& where);
KSubset ksubset_from_json(const Json& j, int n, const std::string& where);
Vertex vertex_from_json(const GraphInstance& g, const Json& j, const std::string& where);
VectorPartition partition_from_json(const Json& j);
Json parse_json_text(const std::string& text);

/// Graph document: family, params, vertex descriptors and edges.
Json graph_to_json(const GraphInstance& g, unsigned threads = 0);
/// Rebuilds the graph from family + params and checks any listed vertices
/// against the rebuilt ones.
GraphInstance graph_from_json(const Json& j, std::uint64_t cap = kDefaultVertexCap);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big_to_json(const BigInt& v);

Json to_json(const GraphInstance& g, const ResolvingSetSpec& s);
Json to_json(const ResolvingReport& r);
Json to_json(const BoundsTable& t);

/// Accepts "landmarks" (vertex descriptors), "indices", or both (which must
/// agree). Optional "family"/"params" must match g.
ResolvingSetSpec landmark_set_from_json(const GraphInstance& g, const Json& j);

/// One "name,value" line per JSON field (header line "field,value").
std::string bounds_csv(const BoundsTable& t);
/// Same fields as aligned columns.
std::string bounds_text(const BoundsTable& t);

}  // namespace drg
