#include "drgmd/qlinalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "drgmd/error.hpp"

namespace drg {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !a.field()->same_as(*b.field())) {
    throw Error(ErrorCode::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

// Rank of a set of bit rows over GF(2).
int xor_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0 && !rows.empty(); --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin(), rows.end(), [mask](std::uint64_t r) { return r & mask; });
    if (it == rows.end()) continue;
    const std::uint64_t pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r & mask) r ^= pivot;
    ++rank;
  }
  return rank;
}

void combinations(int n, int k, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c <= n - (k - static_cast<int>(cur.size())); ++c) {
    cur.push_back(c);
    combinations(n, k, c + 1, cur, out);
    cur.pop_back();
  }
}

// Odometer over base-q digits, last digit least significant.
bool advance(std::vector<Code>& digits, int q) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

RrefResult rref(const Field& f, Matrix matrix) {
  const int rows = static_cast<int>(matrix.size());
  const int cols = rows ? static_cast<int>(matrix.front().size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && matrix[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(matrix[static_cast<std::size_t>(piv)], matrix[static_cast<std::size_t>(r)]);
    auto& prow = matrix[static_cast<std::size_t>(r)];
    const Code scale = f.inv(prow[static_cast<std::size_t>(c)]);
    for (auto& x : prow) x = f.mul(x, scale);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto& row = matrix[static_cast<std::size_t>(i)];
      const Code factor = row[static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        row[jj] = f.sub(row[jj], f.mul(factor, prow[jj]));
      }
    }
    ++r;
  }
  return {std::move(matrix), r};
}

Subspace::Subspace(FieldPtr field, int ambient_dim) : field_(std::move(field)), n_(ambient_dim) {
  if (ambient_dim < 0) throw Error(ErrorCode::BadParams, "negative ambient dimension");
}

Matrix Subspace::basis() const {
  Matrix m;
  m.reserve(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    auto r = row(i);
    m.emplace_back(r.begin(), r.end());
  }
  return m;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    auto r = row(i);
    out.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](Code x) { return x != 0; }) - r.begin()));
  }
  return out;
}

void Subspace::pack() {
  packed_.clear();
  if (field_->order() != 2 || n_ > 64) return;
  packed_.reserve(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    std::uint64_t bits = 0;
    auto r = row(i);
    for (int c = 0; c < n_; ++c)
      if (r[static_cast<std::size_t>(c)]) bits |= std::uint64_t{1} << c;
    packed_.push_back(bits);
  }
}

bool Subspace::contains(std::span<const Code> v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorCode::AmbientMismatch, "vector length mismatch");
  const Field& f = *field_;
  Vec w(v.begin(), v.end());
  const auto piv = pivots();
  for (int i = 0; i < k_; ++i) {
    const Code x = w[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])];
    if (x == 0) continue;
    auto r = row(i);
    for (int c = 0; c < n_; ++c) {
      const auto cc = static_cast<std::size_t>(c);
      w[cc] = f.sub(w[cc], f.mul(x, r[cc]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](Code x) { return x == 0; });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(), b.basis_.begin(),
                                                b.basis_.end());
}

Subspace canonical_subspace(const FieldPtr& field, int n, const Matrix& vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorCode::AmbientMismatch, "vector length mismatch");
    for (Code x : v)
      if (x >= field->order()) throw Error(ErrorCode::BadParams, "element code out of range");
  }
  Subspace s(field, n);
  if (!vectors.empty()) {
    auto reduced = rref(*field, vectors);
    s.k_ = reduced.rank;
    s.basis_.reserve(static_cast<std::size_t>(reduced.rank) * static_cast<std::size_t>(n));
    for (int i = 0; i < reduced.rank; ++i) {
      const auto& r = reduced.matrix[static_cast<std::size_t>(i)];
      s.basis_.insert(s.basis_.end(), r.begin(), r.end());
    }
  }
  s.pack();
  return s;
}

int dim_meet(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return 0;
  // Reduce b's rows against a's RREF basis; what survives spans (a + b) / a.
  if (a.field()->order() == 2 && a.ambient_dim() <= 64) {
    const auto& pa = a.packed_rows();
    const auto& pb = b.packed_rows();
    std::vector<std::uint64_t> lead(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) lead[i] = pa[i] & (~pa[i] + 1);
    std::vector<std::uint64_t> rest;
    rest.reserve(pb.size());
    for (std::uint64_t v : pb) {
      for (std::size_t i = 0; i < pa.size(); ++i)
        if (v & lead[i]) v ^= pa[i];
      if (v) rest.push_back(v);
    }
    return b.dim() - xor_rank(std::move(rest));
  }
  const Field& f = *a.field();
  const int n = a.ambient_dim();
  const auto piv = a.pivots();
  Matrix rest;
  rest.reserve(static_cast<std::size_t>(b.dim()));
  for (int j = 0; j < b.dim(); ++j) {
    auto src = b.row(j);
    Vec v(src.begin(), src.end());
    for (int i = 0; i < a.dim(); ++i) {
      const Code x = v[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])];
      if (x == 0) continue;
      auto r = a.row(i);
      for (int c = 0; c < n; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        v[cc] = f.sub(v[cc], f.mul(x, r[cc]));
      }
    }
    if (std::any_of(v.begin(), v.end(), [](Code x) { return x != 0; })) rest.push_back(std::move(v));
  }
  if (rest.empty()) return b.dim();
  return b.dim() - rref(f, std::move(rest)).rank;
}

Subspace join(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  Matrix rows = a.basis();
  auto more = b.basis();
  rows.insert(rows.end(), more.begin(), more.end());
  return canonical_subspace(a.field(), a.ambient_dim(), rows);
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  // Zassenhaus: rows (x | x) for x in a and (y | 0) for y in b; the rows of the
  // echelon form whose left half vanishes span the intersection.
  const int n = a.ambient_dim();
  const auto nn = static_cast<std::size_t>(n);
  Matrix stacked;
  for (int i = 0; i < a.dim(); ++i) {
    auto r = a.row(i);
    Vec v(2 * nn);
    std::copy(r.begin(), r.end(), v.begin());
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    stacked.push_back(std::move(v));
  }
  for (int i = 0; i < b.dim(); ++i) {
    auto r = b.row(i);
    Vec v(2 * nn, 0);
    std::copy(r.begin(), r.end(), v.begin());
    stacked.push_back(std::move(v));
  }
  Matrix inter;
  if (!stacked.empty()) {
    auto reduced = rref(*a.field(), std::move(stacked));
    for (int i = 0; i < reduced.rank; ++i) {
      const auto& r = reduced.matrix[static_cast<std::size_t>(i)];
      if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n), [](Code x) { return x == 0; })) {
        inter.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
      }
    }
  }
  return canonical_subspace(a.field(), n, inter);
}

BigInt gaussian_binomial(int n, int m, std::uint64_t q) {
  if (m < 0 || m > n) throw Error(ErrorCode::BadParams, "gaussian binomial needs 0 <= m <= n");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qq = q;
  for (int i = 0; i < m; ++i) {
    num *= BigInt(pow(qq, static_cast<unsigned>(n - i))) - 1;
    den *= BigInt(pow(qq, static_cast<unsigned>(i + 1))) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int m, std::uint64_t cap) {
  if (m < 0 || m > n) throw Error(ErrorCode::BadParams, "need 0 <= m <= n");
  const BigInt total = gaussian_binomial(n, m, static_cast<std::uint64_t>(field->order()));
  if (total > cap) {
    throw Error(ErrorCode::TooMany, "enumeration of " + total.str() + " subspaces exceeds cap " + std::to_string(cap));
  }
  const int q = field->order();
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(total));

  std::vector<std::vector<int>> patterns;
  std::vector<int> cur;
  combinations(n, m, 0, cur, patterns);

  for (const auto& piv : patterns) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < m; ++r)
      for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(r, c);

    std::vector<Code> digits(free_pos.size(), 0);
    do {
      Matrix rows(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < m; ++r)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        rows[static_cast<std::size_t>(free_pos[i].first)][static_cast<std::size_t>(free_pos[i].second)] = digits[i];
      out.push_back(canonical_subspace(field, n, rows));
    } while (advance(digits, q));
  }
  return out;
}

std::vector<Subspace> subspaces_within(const Subspace& z, int m, std::uint64_t cap) {
  if (m < 0 || m > z.dim()) throw Error(ErrorCode::BadParams, "need 0 <= m <= dim Z");
  const Field& f = *z.field();
  const int n = z.ambient_dim();
  auto local = enumerate_subspaces(z.field(), z.dim(), m, cap);
  std::vector<Subspace> out;
  out.reserve(local.size());
  for (const auto& s : local) {
    Matrix rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      auto coeffs = s.row(i);
      Vec v(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < z.dim(); ++j) {
        const Code c = coeffs[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        auto zr = z.row(j);
        for (int col = 0; col < n; ++col) {
          const auto cc = static_cast<std::size_t>(col);
          v[cc] = f.add(v[cc], f.mul(c, zr[cc]));
        }
      }
      rows.push_back(std::move(v));
    }
    out.push_back(canonical_subspace(z.field(), n, rows));
  }
  return out;
}

std::uint64_t vector_code(std::span<const Code> v, int q) noexcept {
  std::uint64_t code = 0;
  for (Code x : v) code = code * static_cast<std::uint64_t>(q) + x;
  return code;
}

Vec vector_from_code(std::uint64_t code, int n, int q) {
  Vec v(static_cast<std::size_t>(n), 0);
  for (int i = n; i-- > 0;) {
    v[static_cast<std::size_t>(i)] = static_cast<Code>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return v;
}

}  // namespace drg
