#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgmd/qlinalg.hpp"

namespace drg {

/// A set of subspaces of F_q^n meant to cover every nonzero vector exactly
/// once. Construction does not validate; use verify_partition.
struct VectorPartition {
  FieldPtr field;
  int ambient_dim = 0;
  std::vector<Subspace> pieces;

  // Distinct piece dimensions with multiplicities, ascending by dimension.
  std::vector<std::pair<int, int>> type() const;
};

struct PartitionReport {
  bool passed = false;
  std::string reason;  // empty on success
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;  // pieces meeting nontrivially
  std::optional<Vec> witness_vector;                                // uncovered or multiply covered
};

/// Desarguesian spread of F_q^{2m}: S_inf = {0} x GF(q^m) first, then
/// S_a = {(x, a x)} for a in element-code order.
VectorPartition spread(const FieldPtr& field, int m);

/// {e+1, e}-partition of F_q^{2e+1}: the spread of F_q^{2e+2} cut by the
/// hyperplane whose last coordinate vanishes. Piece 0 is the (e+1)-space X.
VectorPartition partition_e1_e(const FieldPtr& field, int e);

/// {e, 1}-partition of F_q^{2e+1} together with the hyperplane H (last
/// coordinate zero). Pieces 0 .. q^e are the spread of H, then the q^{2e}
/// lines spanned by (v, 1) in vector_code order of v.
struct HyperplanePartition {
  Subspace hyperplane;
  VectorPartition partition;
  std::size_t spread_pieces = 0;
};
HyperplanePartition partition_e_1(const FieldPtr& field, int e);

/// Pairwise trivial meets, the counting identity, and (when q^n <= 2^20) a
/// direct per-vector cover count.
PartitionReport verify_partition(const VectorPartition& p);

}  // namespace drg
