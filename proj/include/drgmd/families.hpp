#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "drgmd/combinat.hpp"
#include "drgmd/qlinalg.hpp"

namespace drg {

enum class Family { Johnson, DoubledOdd, DoubledGrassmann, TwistedGrassmann };

/// CLI / JSON spelling: johnson, doubled-odd, doubled-grassmann, twisted-grassmann.
const char* family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct GraphParams {
  int n = 0;  // ground-set size or ambient dimension
  int e = 0;
  int q = 0;  // 0 for the set families

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

using Vertex = std::variant<KSubset, Subspace>;

inline constexpr std::uint64_t kDefaultVertexCap = 100'000;

/// Fills in n for the families where it is determined by e, and checks the
/// family's parameter constraints. Throws BadParams.
GraphParams normalize_params(Family family, GraphParams params);

/// Vertex count implied by the parameters, without building anything.
BigInt vertex_count(Family family, const GraphParams& params);

class GraphInstance {
 public:
  Family family() const noexcept { return family_; }
  const GraphParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const FieldPtr& field() const noexcept { return field_; }
  // The fixed hyperplane of the twisted Grassmann graph.
  const std::optional<Subspace>& hyperplane() const noexcept { return hyperplane_; }
  int diameter() const noexcept;

  /// Closed-form distance between vertices by index.
  int distance(std::size_t u, std::size_t v) const;
  /// Closed-form distance between vertex values; throws VertexNotInGraph.
  int distance(const Vertex& a, const Vertex& b) const;

  std::optional<std::size_t> index_of(const Vertex& v) const;

 private:
  friend GraphInstance build_graph(Family, GraphParams, std::uint64_t);
  void index_vertices();

  Family family_ = Family::Johnson;
  GraphParams params_;
  FieldPtr field_;
  std::optional<Subspace> hyperplane_;
  std::vector<Vertex> vertices_;
  std::vector<int> sizes_;  // |P| or dim P per vertex
  std::unordered_map<std::string, std::size_t> index_;
};

/// Vertices in deterministic order: Johnson in colex order; doubled families
/// smaller part first; twisted B1 ((e+1)-spaces not in H) then B2
/// ((e-1)-spaces in H). Throws BadParams / TooLarge (count above cap).
GraphInstance build_graph(Family family, GraphParams params, std::uint64_t cap = kDefaultVertexCap);

/// Breadth-first distances over the pairs at closed-form distance 1;
/// unreachable vertices get -1.
std::vector<int> bfs_distances(const GraphInstance& g, std::size_t source);
std::vector<int> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t source);

/// Neighbour lists of the unit-distance graph, ascending.
std::vector<std::vector<std::uint32_t>> adjacency(const GraphInstance& g, unsigned threads = 0);

enum class ExportFormat { EdgeList, Graph6, Json };

/// Throws TooLargeForFormat for graph6 with 2^18 or more vertices.
std::string export_graph(const GraphInstance& g, ExportFormat format, unsigned threads = 0);

std::string graph6_encode(std::size_t order, const std::vector<std::vector<std::uint32_t>>& adj);

/// Key identifying a vertex value (family independent).
std::string vertex_key(const Vertex& v);

}  // namespace drg
