#include "drgmd/combinat.hpp"

#include <algorithm>
#include <limits>

#include "drgmd/error.hpp"

namespace drg {

bool KSubset::contains(int x) const noexcept {
  return std::binary_search(elems.begin(), elems.end(), x);
}

KSubset make_ksubset(int n, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw Error(ErrorCode::BadParams, "subset has repeated elements");
  }
  if (!elems.empty() && (elems.front() < 1 || elems.back() > n)) {
    throw Error(ErrorCode::BadParams, "subset element outside [1, n]");
  }
  return {n, std::move(elems)};
}

std::vector<KSubset> enumerate_ksubsets(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::BadParams, "need 0 <= k <= n");
  std::vector<KSubset> out;
  out.reserve(binomial_u64(n, k));
  // Colex successor: bump the lowest element that can move, reset those below.
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back({n, c});
    int i = 0;
    while (i < k && c[static_cast<std::size_t>(i)] + 1 ==
                        (i + 1 < k ? c[static_cast<std::size_t>(i + 1)] : n + 1)) {
      ++i;
    }
    if (i == k) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j + 1;
  }
  return out;
}

std::uint64_t colex_rank(const KSubset& s) {
  std::uint64_t r = 0;
  for (int i = 0; i < s.size(); ++i) r += binomial_u64(s.elems[static_cast<std::size_t>(i)] - 1, i + 1);
  return r;
}

KSubset colex_unrank(int n, int k, std::uint64_t rank) {
  if (k < 0 || k > n) throw Error(ErrorCode::BadParams, "need 0 <= k <= n");
  if (rank >= binomial_u64(n, k)) throw Error(ErrorCode::BadParams, "rank out of range");
  std::vector<int> elems(static_cast<std::size_t>(k));
  int x = n;
  for (int i = k; i >= 1; --i) {
    // Largest x with C(x - 1, i) <= rank.
    while (binomial_u64(x - 1, i) > rank) --x;
    elems[static_cast<std::size_t>(i - 1)] = x;
    rank -= binomial_u64(x - 1, i);
    --x;
  }
  return {n, std::move(elems)};
}

int intersect_size(const KSubset& a, const KSubset& b) {
  if (a.n != b.n) throw Error(ErrorCode::AmbientMismatch, "subsets of different ground sets");
  int count = 0;
  auto i = a.elems.begin();
  auto j = b.elems.begin();
  while (i != a.elems.end() && j != b.elems.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) throw Error(ErrorCode::BadParams, "need 0 <= k <= n");
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  const BigInt r = binomial(n, k);
  if (r > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorCode::TooLarge, "binomial overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace drg
