#include "drgmd/partitions.hpp"

#include <map>
#include <string>

#include "drgmd/error.hpp"

namespace drg {

namespace {

Vec unit(int n, int i) {
  Vec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<std::pair<int, int>> VectorPartition::type() const {
  std::map<int, int> counts;
  for (const auto& s : pieces) ++counts[s.dim()];
  return {counts.begin(), counts.end()};
}

VectorPartition spread(const FieldPtr& field, int m) {
  if (m < 1) throw Error(ErrorCode::BadParams, "spread needs m >= 1");
  const ExtField& ext = extend_field(field, m);
  const int n = 2 * m;
  const int big_q = ext.field->order();

  VectorPartition out{field, n, {}};
  out.pieces.reserve(static_cast<std::size_t>(big_q) + 1);

  Matrix inf;
  for (int i = 0; i < m; ++i) inf.push_back(unit(n, m + i));
  out.pieces.push_back(canonical_subspace(field, n, inf));

  for (int a = 0; a < big_q; ++a) {
    const auto mult = ext.multiplication_matrix(static_cast<Code>(a));
    Matrix rows;
    for (int i = 0; i < m; ++i) {
      Vec v = unit(n, i);
      const auto& image = mult[static_cast<std::size_t>(i)];
      std::copy(image.begin(), image.end(), v.begin() + m);
      rows.push_back(std::move(v));
    }
    out.pieces.push_back(canonical_subspace(field, n, rows));
  }
  return out;
}

VectorPartition partition_e1_e(const FieldPtr& field, int e) {
  if (e < 1) throw Error(ErrorCode::BadParams, "{e+1,e}-partition needs e >= 1");
  const VectorPartition big = spread(field, e + 1);
  const int wide = 2 * e + 2;
  const int n = 2 * e + 1;

  Matrix hyper;
  for (int i = 0; i < n; ++i) hyper.push_back(unit(wide, i));
  const Subspace section = canonical_subspace(field, wide, hyper);

  auto restrict_to_section = [&](const Subspace& s) {
    const Subspace cut = meet(s, section);
    Matrix rows;
    for (int i = 0; i < cut.dim(); ++i) {
      auto r = cut.row(i);
      rows.emplace_back(r.begin(), r.begin() + n);
    }
    return canonical_subspace(field, n, rows);
  };

  VectorPartition out{field, n, {}};
  out.pieces.reserve(big.pieces.size());
  // big.pieces[1] is S_0 = GF(q^{e+1}) x {0}, which already lies in the section.
  out.pieces.push_back(restrict_to_section(big.pieces[1]));
  out.pieces.push_back(restrict_to_section(big.pieces[0]));
  for (std::size_t i = 2; i < big.pieces.size(); ++i) out.pieces.push_back(restrict_to_section(big.pieces[i]));
  return out;
}

HyperplanePartition partition_e_1(const FieldPtr& field, int e) {
  if (e < 2) throw Error(ErrorCode::BadParams, "{e,1}-partition needs e >= 2");
  const int n = 2 * e + 1;
  const int q = field->order();
  const VectorPartition inner = spread(field, e);

  Matrix hyper;
  for (int i = 0; i < n - 1; ++i) hyper.push_back(unit(n, i));

  HyperplanePartition out{canonical_subspace(field, n, hyper), {field, n, {}}, inner.pieces.size()};
  const std::uint64_t lines = ipow(static_cast<std::uint64_t>(q), 2 * e);
  out.partition.pieces.reserve(inner.pieces.size() + lines);
  for (const auto& s : inner.pieces) {
    Matrix rows;
    for (int i = 0; i < s.dim(); ++i) {
      auto r = s.row(i);
      Vec v(r.begin(), r.end());
      v.push_back(0);
      rows.push_back(std::move(v));
    }
    out.partition.pieces.push_back(canonical_subspace(field, n, rows));
  }
  for (std::uint64_t c = 0; c < lines; ++c) {
    Vec v = vector_from_code(c, n - 1, q);
    v.push_back(1);
    out.partition.pieces.push_back(canonical_subspace(field, n, Matrix{v}));
  }
  return out;
}

PartitionReport verify_partition(const VectorPartition& p) {
  PartitionReport rep;
  const int q = p.field->order();
  const int n = p.ambient_dim;
  for (std::size_t i = 0; i < p.pieces.size(); ++i) {
    if (p.pieces[i].ambient_dim() != n || !p.pieces[i].field()->same_as(*p.field)) {
      rep.reason = "piece " + std::to_string(i) + " lives in a different ambient space";
      return rep;
    }
    if (p.pieces[i].dim() == 0) {
      rep.reason = "piece " + std::to_string(i) + " is the zero subspace";
      return rep;
    }
  }
  for (std::size_t i = 0; i < p.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < p.pieces.size(); ++j) {
      if (dim_meet(p.pieces[i], p.pieces[j]) != 0) {
        rep.reason = "pieces " + std::to_string(i) + " and " + std::to_string(j) + " meet nontrivially";
        rep.witness_pair = std::make_pair(i, j);
        return rep;
      }
    }
  }

  const BigInt space = BigInt(pow(BigInt(q), static_cast<unsigned>(n))) - 1;
  BigInt covered = 0;
  for (const auto& s : p.pieces) covered += BigInt(pow(BigInt(q), static_cast<unsigned>(s.dim()))) - 1;
  const bool identity = covered == space;

  if (space < (BigInt(1) << 20)) {
    const auto total = static_cast<std::uint64_t>(space) + 1;
    std::vector<std::uint32_t> hits(total, 0);
    const Field& f = *p.field;
    for (const auto& s : p.pieces) {
      std::vector<Code> coeffs(static_cast<std::size_t>(s.dim()), 0);
      const std::uint64_t combos = static_cast<std::uint64_t>(pow(BigInt(q), static_cast<unsigned>(s.dim())));
      for (std::uint64_t c = 1; c < combos; ++c) {
        std::uint64_t rest = c;
        for (auto& x : coeffs) {
          x = static_cast<Code>(rest % static_cast<std::uint64_t>(q));
          rest /= static_cast<std::uint64_t>(q);
        }
        Vec v(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < s.dim(); ++i) {
          const Code a = coeffs[static_cast<std::size_t>(i)];
          if (a == 0) continue;
          auto r = s.row(i);
          for (int k = 0; k < n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            v[kk] = f.add(v[kk], f.mul(a, r[kk]));
          }
        }
        ++hits[vector_code(v, q)];
      }
    }
    for (std::uint64_t code = 1; code < total; ++code) {
      if (hits[code] != 1) {
        rep.reason = hits[code] == 0 ? "vector not covered" : "vector covered more than once";
        rep.witness_vector = vector_from_code(code, n, q);
        return rep;
      }
    }
  }
  if (!identity) {
    rep.reason = "piece sizes do not add up to the nonzero vectors of the space";
    return rep;
  }
  rep.passed = true;
  return rep;
}

}  // namespace drg
