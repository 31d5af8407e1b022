#pragma once

#include <cstdint>
#include <vector>

#include "drgmd/bigint.hpp"

namespace drg {

/// A subset of [n] = {1, ..., n}, elements strictly increasing.
struct KSubset {
  int n = 0;
  std::vector<int> elems;

  int size() const noexcept { return static_cast<int>(elems.size()); }
  bool contains(int x) const noexcept;

  friend bool operator==(const KSubset&, const KSubset&) = default;
};

/// Validates and sorts; throws BadParams on duplicates or out-of-range items.
KSubset make_ksubset(int n, std::vector<int> elems);

/// All k-subsets of [n] in colexicographic order.
std::vector<KSubset> enumerate_ksubsets(int n, int k);

/// Colex rank (position in enumerate_ksubsets) and its inverse.
std::uint64_t colex_rank(const KSubset& s);
KSubset colex_unrank(int n, int k, std::uint64_t rank);

/// |A ∩ B| by sorted merge. Throws AmbientMismatch when the ground sets differ.
int intersect_size(const KSubset& a, const KSubset& b);

BigInt binomial(int n, int k);
std::uint64_t binomial_u64(int n, int k);  // throws TooLarge on overflow

}  // namespace drg
