#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "drgmd/families.hpp"

namespace drg {

enum class Provenance {
  JohnsonConstruction,
  DoubledOddConstruction,
  DoubledGrassmannConstruction,
  TwistedGrassmannConstruction,
  User,
  Search,
};

const char* provenance_name(Provenance p) noexcept;
std::optional<Provenance> parse_provenance(std::string_view name) noexcept;

/// Landmarks as vertex indices of a particular graph (sorted, no repeats).
struct ResolvingSetSpec {
  std::vector<std::size_t> landmarks;
  Provenance provenance = Provenance::User;
  BigInt multiset_count = 0;  // number of members before deduplication
};

struct ResolvingReport {
  bool is_resolving = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t set_size = 0;
  std::optional<BigInt> construction_bound;
  std::optional<int> exact_mu;
};

/// A landmark set as vertex values, before it is placed on a graph.
struct Construction {
  Provenance provenance = Provenance::User;
  BigInt multiset_count = 0;
  std::vector<Vertex> members;  // deduplicated, first-occurrence order
};

/// The 2e sets M ∪ {2e+1} with M an (e-1)-subset of [e] or of [2e] \ [e];
/// lives on J(2e+1, e). Needs e >= 3.
Construction construct_johnson_set(int e);

/// The e-subsets of [e+1] together with {1} ∪ M for M an (e-1)-subset of
/// [2e+1] \ [e+1]. Needs e >= 2.
Construction construct_doubled_odd_set(int e);

/// Built on partition_e1_e: every e-space inside X, and every e-space inside
/// U ⊕ Y for the e-dimensional pieces Y, where U is entry `u_index` of the
/// 1-spaces of X in enumeration order. Needs e >= 2.
Construction construct_doubled_grassmann_set(int q, int e, std::size_t u_index = 0);

/// Built on partition_e_1: every (e-1)-space inside a spread piece of H, and
/// every (e+1)-space W != U inside U ⊕ Y for the line pieces Y, where U is
/// entry `u_index` of the (e+1)-spaces of H in enumeration order (index 0 is
/// the span of the first e+1 unit vectors). Needs e >= 2.
Construction construct_twisted_grassmann_set(int q, int e, std::size_t u_index = 0);

/// Dispatch on the family; Johnson needs n = 2e+1.
Construction construct_for(Family family, const GraphParams& params, std::size_t u_index = 0);

/// Maps construction members to vertex indices of g.
ResolvingSetSpec place_construction(const GraphInstance& g, const Construction& c);

/// Validates indices; the multiset count is the number of indices given.
ResolvingSetSpec make_landmark_set(const GraphInstance& g, std::vector<std::size_t> indices,
                                   Provenance provenance = Provenance::User);

/// Distance signature of every vertex; row v holds d(v, landmark_i).
std::vector<std::uint8_t> signatures(const GraphInstance& g, const std::vector<std::size_t>& landmarks,
                                     unsigned threads = 0);

/// Resolving check. On failure the witness is the lexicographically first
/// pair u < v with equal signatures.
ResolvingReport verify_resolving(const GraphInstance& g, const ResolvingSetSpec& s, unsigned threads = 0);

/// Closed-form upper bound proved for the family's construction, when the
/// parameters meet its hypotheses.
std::optional<BigInt> construction_bound(Family family, const GraphParams& params);

inline constexpr std::size_t kDefaultSearchVertexCap = 512;
inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

struct ExactResult {
  bool conclusive = false;
  int mu = 0;
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
  std::string reason;  // why the search stopped short
};

/// Smallest resolving set by iterative deepening over k with a canonical
/// depth-first search; a partial set is dropped once some class of
/// still-confused vertices is larger than (D+1)^r for r landmarks left.
/// max_k <= 0 means |V| - 1. Throws TooLarge above vertex_cap.
ExactResult exact_metric_dimension(const GraphInstance& g, int max_k = 0,
                                   std::uint64_t budget = kDefaultSearchBudget,
                                   std::size_t vertex_cap = kDefaultSearchVertexCap);

enum class LogBase { Natural, Two };

struct BoundRow {
  std::string name;
  std::variant<std::monostate, BigInt, double> value;
};

struct BoundsTable {
  Family family = Family::Johnson;
  GraphParams params;
  LogBase log_base = LogBase::Natural;
  std::vector<BoundRow> rows;

  const BoundRow* find(std::string_view name) const;
};

/// Row names, always all present (unset rows hold monostate): vertex_count,
/// thm_bound, multiset_count, dedup_size, prop_johnson, known_exact, babai_M,
/// babai_general, babai_strong (in the chosen base), then the same two Babai
/// values for the natural and binary logarithm.
BoundsTable bounds_table(Family family, const GraphParams& params, LogBase log_base = LogBase::Natural,
                         bool materialize = true);

/// max over 1 <= j <= e of q^{j^2} [e+1, j]_q [e, j]_q.
BigInt babai_m(int q, int e);

}  // namespace drg
