#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "drgmd/bigint.hpp"
#include "drgmd/field.hpp"

namespace drg {

using Vec = std::vector<Code>;
using Matrix = std::vector<Vec>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct RrefResult {
  Matrix matrix;  // same shape as the input; zero rows last
  int rank = 0;
};

/// Reduced row echelon form over `f`. Pure; does not touch the input.
RrefResult rref(const Field& f, Matrix matrix);

/// A subspace of F_q^n held by its RREF basis. Two values compare equal
/// exactly when they are the same set of vectors.
class Subspace {
 public:
  Subspace(FieldPtr field, int ambient_dim);  // zero subspace

  const FieldPtr& field() const noexcept { return field_; }
  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return k_; }

  std::span<const Code> row(int i) const noexcept {
    return {basis_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  const std::vector<Code>& flat_basis() const noexcept { return basis_; }
  Matrix basis() const;
  std::vector<int> pivots() const;

  // Row bitmasks (bit c = column c); only populated when q == 2 and n <= 64.
  const std::vector<std::uint64_t>& packed_rows() const noexcept { return packed_; }

  bool contains(std::span<const Code> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.basis_ == b.basis_;
  }
  // Order by dimension, then basis entries row-major.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  friend Subspace canonical_subspace(const FieldPtr&, int, const Matrix&);
  void pack();

  FieldPtr field_;
  int n_ = 0;
  int k_ = 0;
  std::vector<Code> basis_;
  std::vector<std::uint64_t> packed_;
};

/// RREF of the span of `vectors` (each of length n).
Subspace canonical_subspace(const FieldPtr& field, int n, const Matrix& vectors);

int dim_meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
inline bool is_contained(const Subspace& inner, const Subspace& outer) {
  return dim_meet(inner, outer) == inner.dim();
}

/// All m-dimensional subspaces of F_q^n ordered by pivot columns
/// (lexicographic), then by free entries read row-major as base-q digits with
/// the first free entry most significant. Throws TooMany above `cap`.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int m,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// All m-dimensional subspaces of z in ambient coordinates, in the order of
/// enumerate_subspaces applied to z's own coordinates.
std::vector<Subspace> subspaces_within(const Subspace& z, int m,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// Number of m-dimensional subspaces of an n-dimensional space over GF(q).
BigInt gaussian_binomial(int n, int m, std::uint64_t q);

/// Integer code of a vector with the first coordinate most significant.
std::uint64_t vector_code(std::span<const Code> v, int q) noexcept;
Vec vector_from_code(std::uint64_t code, int n, int q);

}  // namespace drg
