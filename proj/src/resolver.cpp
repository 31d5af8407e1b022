#include "drgmd/resolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "drgmd/error.hpp"
#include "drgmd/partitions.hpp"
#include "parallel.hpp"

namespace drg {

namespace {

// Collects members in first-occurrence order, counting repeats.
class MemberSet {
 public:
  void add(Vertex v) {
    ++count_;
    if (seen_.insert(vertex_key(v)).second) members_.push_back(std::move(v));
  }
  Construction finish(Provenance p) && { return {p, count_, std::move(members_)}; }

 private:
  std::set<std::string> seen_;
  std::vector<Vertex> members_;
  std::uint64_t count_ = 0;
};

BigInt ipow(std::uint64_t base, unsigned exp) { return pow(BigInt(base), exp); }

const Subspace& pick(const std::vector<Subspace>& options, std::size_t index, const char* what) {
  if (index >= options.size()) {
    throw Error(ErrorCode::BadParams, std::string(what) + " index " + std::to_string(index) + " out of range (" +
                                          std::to_string(options.size()) + " choices)");
  }
  return options[index];
}

}  // namespace

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::JohnsonConstruction: return "johnson-construction";
    case Provenance::DoubledOddConstruction: return "doubled-odd-construction";
    case Provenance::DoubledGrassmannConstruction: return "doubled-grassmann-construction";
    case Provenance::TwistedGrassmannConstruction: return "twisted-grassmann-construction";
    case Provenance::User: return "user";
    case Provenance::Search: return "search";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view name) noexcept {
  for (Provenance p : {Provenance::JohnsonConstruction, Provenance::DoubledOddConstruction,
                       Provenance::DoubledGrassmannConstruction, Provenance::TwistedGrassmannConstruction,
                       Provenance::User, Provenance::Search}) {
    if (name == provenance_name(p)) return p;
  }
  return std::nullopt;
}

Construction construct_johnson_set(int e) {
  if (e < 3) throw Error(ErrorCode::BadParams, "johnson construction needs e >= 3");
  const int n = 2 * e + 1;
  MemberSet out;
  for (int offset : {0, e}) {
    for (const auto& m : enumerate_ksubsets(e, e - 1)) {
      std::vector<int> elems;
      for (int x : m.elems) elems.push_back(x + offset);
      elems.push_back(n);
      out.add(make_ksubset(n, std::move(elems)));
    }
  }
  return std::move(out).finish(Provenance::JohnsonConstruction);
}

Construction construct_doubled_odd_set(int e) {
  if (e < 2) throw Error(ErrorCode::BadParams, "doubled odd construction needs e >= 2");
  const int n = 2 * e + 1;
  MemberSet out;
  for (const auto& w : enumerate_ksubsets(e + 1, e)) out.add(KSubset{n, w.elems});
  // Y = [2e+1] \ [e+1] has e elements.
  for (const auto& m : enumerate_ksubsets(e, e - 1)) {
    std::vector<int> elems{1};
    for (int x : m.elems) elems.push_back(x + e + 1);
    out.add(make_ksubset(n, std::move(elems)));
  }
  return std::move(out).finish(Provenance::DoubledOddConstruction);
}

Construction construct_doubled_grassmann_set(int q, int e, std::size_t u_index) {
  if (e < 2) throw Error(ErrorCode::BadParams, "doubled grassmann construction needs e >= 2");
  const FieldPtr field = field_of_order(q);
  const VectorPartition part = partition_e1_e(field, e);
  const Subspace& x = part.pieces.front();
  const auto lines = subspaces_within(x, 1);
  const Subspace& u = pick(lines, u_index, "U");

  MemberSet out;
  for (std::size_t i = 1; i < part.pieces.size(); ++i) {
    const Subspace uy = join(u, part.pieces[i]);
    for (auto& w : subspaces_within(uy, e)) out.add(std::move(w));
  }
  for (auto& w : subspaces_within(x, e)) out.add(std::move(w));
  return std::move(out).finish(Provenance::DoubledGrassmannConstruction);
}

Construction construct_twisted_grassmann_set(int q, int e, std::size_t u_index) {
  if (e < 2) throw Error(ErrorCode::BadParams, "twisted grassmann construction needs e >= 2");
  const FieldPtr field = field_of_order(q);
  const HyperplanePartition hp = partition_e_1(field, e);
  const Subspace& h = hp.hyperplane;
  const auto choices = subspaces_within(h, e + 1);
  const Subspace& u = pick(choices, u_index, "U");

  MemberSet out;
  for (std::size_t i = hp.spread_pieces; i < hp.partition.pieces.size(); ++i) {
    const Subspace uy = join(u, hp.partition.pieces[i]);
    for (auto& w : subspaces_within(uy, e + 1)) {
      if (w == u) continue;
      if (is_contained(w, h)) throw std::logic_error("landmark outside the (e+1)-dimensional vertex class");
      out.add(std::move(w));
    }
  }
  for (std::size_t i = 0; i < hp.spread_pieces; ++i) {
    for (auto& w : subspaces_within(hp.partition.pieces[i], e - 1)) {
      if (!is_contained(w, h)) throw std::logic_error("landmark outside the (e-1)-dimensional vertex class");
      out.add(std::move(w));
    }
  }
  return std::move(out).finish(Provenance::TwistedGrassmannConstruction);
}

Construction construct_for(Family family, const GraphParams& raw, std::size_t u_index) {
  const GraphParams p = normalize_params(family, raw);
  switch (family) {
    case Family::Johnson:
      if (p.n != 2 * p.e + 1) throw Error(ErrorCode::BadParams, "johnson construction lives on J(2e+1, e)");
      return construct_johnson_set(p.e);
    case Family::DoubledOdd: return construct_doubled_odd_set(p.e);
    case Family::DoubledGrassmann: return construct_doubled_grassmann_set(p.q, p.e, u_index);
    case Family::TwistedGrassmann: return construct_twisted_grassmann_set(p.q, p.e, u_index);
  }
  throw Error(ErrorCode::BadParams, "unknown family");
}

ResolvingSetSpec place_construction(const GraphInstance& g, const Construction& c) {
  ResolvingSetSpec spec;
  spec.provenance = c.provenance;
  spec.multiset_count = c.multiset_count;
  spec.landmarks.reserve(c.members.size());
  for (const auto& m : c.members) {
    const auto idx = g.index_of(m);
    if (!idx) throw Error(ErrorCode::VertexNotInGraph, "construction member is not a vertex of the graph");
    spec.landmarks.push_back(*idx);
  }
  std::sort(spec.landmarks.begin(), spec.landmarks.end());
  spec.landmarks.erase(std::unique(spec.landmarks.begin(), spec.landmarks.end()), spec.landmarks.end());
  return spec;
}

ResolvingSetSpec make_landmark_set(const GraphInstance& g, std::vector<std::size_t> indices, Provenance provenance) {
  for (std::size_t i : indices) {
    if (i >= g.size()) throw Error(ErrorCode::VertexNotInGraph, "landmark index " + std::to_string(i) + " out of range");
  }
  ResolvingSetSpec spec;
  spec.provenance = provenance;
  spec.multiset_count = indices.size();
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  spec.landmarks = std::move(indices);
  return spec;
}

std::vector<std::uint8_t> signatures(const GraphInstance& g, const std::vector<std::size_t>& landmarks,
                                     unsigned threads) {
  const std::size_t k = landmarks.size();
  std::vector<std::uint8_t> sig(g.size() * k);
  detail::parallel_for(g.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v)
      for (std::size_t i = 0; i < k; ++i) sig[v * k + i] = static_cast<std::uint8_t>(g.distance(v, landmarks[i]));
  });
  return sig;
}

ResolvingReport verify_resolving(const GraphInstance& g, const ResolvingSetSpec& s, unsigned threads) {
  for (std::size_t i : s.landmarks) {
    if (i >= g.size()) throw Error(ErrorCode::VertexNotInGraph, "landmark index out of range");
  }
  ResolvingReport rep;
  rep.set_size = s.landmarks.size();
  rep.construction_bound = construction_bound(g.family(), g.params());

  const std::size_t k = s.landmarks.size();
  const auto sig = signatures(g, s.landmarks, threads);
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    const auto* ra = sig.data() + a * k;
    const auto* rb = sig.data() + b * k;
    const int c = k ? std::memcmp(ra, rb, k) : 0;
    return c != 0 ? c < 0 : a < b;
  };
  std::sort(order.begin(), order.end(), row_less);

  // Indices ascend inside each run of equal signatures, so a run's first two
  // entries are its smallest pair; keep the run with the smallest leader.
  auto same_row = [&](std::size_t a, std::size_t b) {
    return k == 0 || std::memcmp(sig.data() + a * k, sig.data() + b * k, k) == 0;
  };
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && same_row(order[i], order[j])) ++j;
    if (j - i >= 2 && (!rep.witness || order[i] < rep.witness->first)) {
      rep.witness = std::make_pair(order[i], order[i + 1]);
    }
    i = j;
  }
  rep.is_resolving = !rep.witness.has_value();
  return rep;
}

std::optional<BigInt> construction_bound(Family family, const GraphParams& raw) {
  const GraphParams p = normalize_params(family, raw);
  const auto q = static_cast<std::uint64_t>(p.q);
  const auto e = static_cast<unsigned>(p.e);
  switch (family) {
    case Family::Johnson:
      if (p.e >= 3 && p.n == 2 * p.e + 1) return BigInt(2 * p.e);
      return std::nullopt;
    case Family::DoubledOdd:
      if (p.e >= 2) return BigInt(2 * p.e + 1);
      return std::nullopt;
    case Family::DoubledGrassmann:
      if (p.e >= 2) return (ipow(q, 2 * e + 2) - 1) / (q - 1);
      return std::nullopt;
    case Family::TwistedGrassmann:
      return (ipow(q, 2 * e) * (ipow(q, e + 2) - q + 1) - 1) / (q - 1);
  }
  return std::nullopt;
}

ExactResult exact_metric_dimension(const GraphInstance& g, int max_k, std::uint64_t budget,
                                   std::size_t vertex_cap) {
  const std::size_t n = g.size();
  if (n > vertex_cap) {
    throw Error(ErrorCode::TooLarge, "exact search limited to " + std::to_string(vertex_cap) + " vertices");
  }
  ExactResult res;
  if (n <= 1) {
    res.conclusive = true;
    return res;
  }
  std::vector<std::uint8_t> dist(n * n);
  int diam = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const int d = g.distance(u, v);
      dist[u * n + v] = static_cast<std::uint8_t>(d);
      diam = std::max(diam, d);
    }
  const std::uint64_t split = static_cast<std::uint64_t>(diam) + 1;

  // capacity[r] = (D+1)^r, saturated.
  std::vector<std::uint64_t> capacity(n + 1, 1);
  for (std::size_t r = 1; r <= n; ++r) {
    capacity[r] = capacity[r - 1] > n ? capacity[r - 1] : capacity[r - 1] * split;
  }
  int lower = 0;
  while (capacity[static_cast<std::size_t>(lower)] < n) ++lower;
  const int top = (max_k <= 0 || max_k > static_cast<int>(n) - 1) ? static_cast<int>(n) - 1 : max_k;

  // Class labels per depth; depth 0 is the single class of all vertices.
  std::vector<std::vector<std::uint32_t>> cls(n + 1, std::vector<std::uint32_t>(n, 0));
  std::vector<std::uint32_t> relabel;
  std::vector<std::uint32_t> sizes;
  std::vector<std::size_t> chosen;
  bool out_of_budget = false;

  // Refines the classes of depth t by landmark c into depth t+1; returns the
  // largest class size.
  auto refine = [&](std::size_t t, std::size_t c, std::uint32_t classes) {
    relabel.assign(static_cast<std::size_t>(classes) * split, UINT32_MAX);
    sizes.clear();
    const auto& src = cls[t];
    auto& dst = cls[t + 1];
    std::uint32_t worst = 0;
    for (std::size_t v = 0; v < n; ++v) {
      auto& slot = relabel[src[v] * split + dist[c * n + v]];
      if (slot == UINT32_MAX) {
        slot = static_cast<std::uint32_t>(sizes.size());
        sizes.push_back(0);
      }
      dst[v] = slot;
      worst = std::max(worst, ++sizes[slot]);
    }
    return std::make_pair(worst, static_cast<std::uint32_t>(sizes.size()));
  };

  std::function<bool(std::size_t, std::size_t, std::uint32_t, int)> search =
      [&](std::size_t start, std::size_t t, std::uint32_t classes, int k) -> bool {
    const auto remaining = static_cast<std::size_t>(k) - t;
    for (std::size_t c = start; c + remaining <= n; ++c) {
      if (++res.nodes > budget) {
        out_of_budget = true;
        return false;
      }
      const auto [worst, count] = refine(t, c, classes);
      chosen.push_back(c);
      if (worst == 1) return true;
      if (remaining > 1 && capacity[remaining - 1] >= worst && search(c + 1, t + 1, count, k)) return true;
      chosen.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  };

  for (int k = std::max(lower, 1); k <= top; ++k) {
    chosen.clear();
    if (search(0, 0, 1, k)) {
      res.conclusive = true;
      res.mu = static_cast<int>(chosen.size());
      res.witness = chosen;
      return res;
    }
    if (out_of_budget) {
      res.reason = "node budget exhausted while searching sets of size " + std::to_string(k);
      return res;
    }
  }
  res.reason = "no resolving set of size <= " + std::to_string(top);
  return res;
}

const BoundRow* BoundsTable::find(std::string_view name) const {
  for (const auto& r : rows)
    if (r.name == name) return &r;
  return nullptr;
}

BigInt babai_m(int q, int e) {
  BigInt best = 0;
  const auto qq = static_cast<std::uint64_t>(q);
  for (int j = 1; j <= e; ++j) {
    const BigInt term = ipow(qq, static_cast<unsigned>(j * j)) * gaussian_binomial(e + 1, j, qq) *
                        gaussian_binomial(e, j, qq);
    best = std::max(best, term);
  }
  return best;
}

BoundsTable bounds_table(Family family, const GraphParams& raw, LogBase log_base, bool materialize) {
  const GraphParams p = normalize_params(family, raw);
  BoundsTable t;
  t.family = family;
  t.params = p;
  t.log_base = log_base;
  for (const char* name : {"vertex_count", "thm_bound", "multiset_count", "dedup_size", "prop_johnson",
                           "known_exact", "babai_M", "babai_general", "babai_strong", "babai_general_ln",
                           "babai_strong_ln", "babai_general_log2", "babai_strong_log2"}) {
    t.rows.push_back({name, std::monostate{}});
  }
  auto set = [&](std::string_view name, std::variant<std::monostate, BigInt, double> v) {
    for (auto& r : t.rows)
      if (r.name == name) r.value = std::move(v);
  };

  set("vertex_count", vertex_count(family, p));
  if (auto b = construction_bound(family, p)) set("thm_bound", *b);

  if (materialize && construction_bound(family, p)) {
    try {
      const Construction c = construct_for(family, p);
      set("multiset_count", c.multiset_count);
      set("dedup_size", BigInt(c.members.size()));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::TooLarge && err.code() != ErrorCode::TooMany) throw;
    }
  }

  switch (family) {
    case Family::Johnson: {
      if (p.e >= 3) set("prop_johnson", BigInt((p.e + 1) * ((p.n + p.e) / (p.e + 1))));
      const int small = std::min(p.e, p.n - p.e);
      if (small == 1) {
        set("known_exact", BigInt(p.n - 1));
      } else if (p.e == 2) {
        if (p.n == 4 || p.n == 5) {
          set("known_exact", BigInt(3));
        } else if (p.n >= 6) {
          const int i = p.n % 3;
          set("known_exact", BigInt(2 * (p.n - i) / 3 + i));
        }
      }
      break;
    }
    case Family::DoubledOdd:
      if (p.e == 1) set("known_exact", BigInt(2));
      break;
    case Family::DoubledGrassmann:
      if (p.e == 1) set("known_exact", BigInt(p.q) * (p.q + 1));
      break;
    case Family::TwistedGrassmann: {
      const BigInt big_n = gaussian_binomial(2 * p.e + 1, p.e, static_cast<std::uint64_t>(p.q));
      const BigInt m = babai_m(p.q, p.e);
      set("babai_M", m);
      const double nd = static_cast<double>(big_n);
      const double md = static_cast<double>(m);
      for (LogBase base : {LogBase::Natural, LogBase::Two}) {
        const double lg = base == LogBase::Natural ? std::log(nd) : std::log2(nd);
        const double general = 4.0 * std::sqrt(nd) * lg;
        const std::string suffix = base == LogBase::Natural ? "_ln" : "_log2";
        set("babai_general" + suffix, general);
        if (base == log_base) set("babai_general", general);
        if (big_n > m) {
          const double strong = 2.0 * p.e * nd / (nd - md) * lg;
          set("babai_strong" + suffix, strong);
          if (base == log_base) set("babai_strong", strong);
        }
      }
      break;
    }
  }
  return t;
}

}  // namespace drg
