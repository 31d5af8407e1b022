#include "drgmd/families.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "drgmd/error.hpp"
#include "drgmd/serialize.hpp"
#include "parallel.hpp"

namespace drg {

namespace {

int vertex_size(const Vertex& v) {
  if (const auto* s = std::get_if<KSubset>(&v)) return s->size();
  return std::get<Subspace>(v).dim();
}

bool inside_hyperplane(const Subspace& s) {
  // The hyperplane is {last coordinate = 0}.
  const int last = s.ambient_dim() - 1;
  for (int i = 0; i < s.dim(); ++i)
    if (s.row(i)[static_cast<std::size_t>(last)] != 0) return false;
  return true;
}

}  // namespace

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::Johnson: return "johnson";
    case Family::DoubledOdd: return "doubled-odd";
    case Family::DoubledGrassmann: return "doubled-grassmann";
    case Family::TwistedGrassmann: return "twisted-grassmann";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (Family f : {Family::Johnson, Family::DoubledOdd, Family::DoubledGrassmann, Family::TwistedGrassmann}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

GraphParams normalize_params(Family family, GraphParams p) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::BadParams, std::string(family_name(family)) + ": " + why);
  };
  switch (family) {
    case Family::Johnson:
      if (p.n == 0) p.n = 2 * p.e + 1;
      if (p.e < 1 || p.e >= p.n) throw bad("need 1 <= e <= n-1");
      p.q = 0;
      return p;
    case Family::DoubledOdd:
      if (p.e < 1) throw bad("need e >= 1");
      if (p.n != 0 && p.n != 2 * p.e + 1) throw bad("n must equal 2e+1");
      p.n = 2 * p.e + 1;
      p.q = 0;
      return p;
    case Family::DoubledGrassmann:
    case Family::TwistedGrassmann: {
      const int min_e = family == Family::TwistedGrassmann ? 2 : 1;
      if (p.e < min_e) throw bad("need e >= " + std::to_string(min_e));
      int prime = 0;
      int deg = 0;
      if (!prime_power(p.q, prime, deg)) throw bad("q must be a prime power");
      if (p.q > kMaxFieldOrder) throw Error(ErrorCode::TooLarge, "q exceeds 4096");
      if (p.n != 0 && p.n != 2 * p.e + 1) throw bad("n must equal 2e+1");
      p.n = 2 * p.e + 1;
      return p;
    }
  }
  throw bad("unknown family");
}

BigInt vertex_count(Family family, const GraphParams& raw) {
  const GraphParams p = normalize_params(family, raw);
  const auto q = static_cast<std::uint64_t>(p.q);
  switch (family) {
    case Family::Johnson: return binomial(p.n, p.e);
    case Family::DoubledOdd: return binomial(p.n, p.e) + binomial(p.n, p.e + 1);
    case Family::DoubledGrassmann: return gaussian_binomial(p.n, p.e, q) + gaussian_binomial(p.n, p.e + 1, q);
    case Family::TwistedGrassmann:
      return gaussian_binomial(p.n, p.e + 1, q) - gaussian_binomial(p.n - 1, p.e + 1, q) +
             gaussian_binomial(p.n - 1, p.e - 1, q);
  }
  return 0;
}

std::string vertex_key(const Vertex& v) {
  std::string key;
  if (const auto* s = std::get_if<KSubset>(&v)) {
    key = "S" + std::to_string(s->n) + ":";
    for (int x : s->elems) key += std::to_string(x) + ",";
    return key;
  }
  const auto& sp = std::get<Subspace>(v);
  key = "V" + std::to_string(sp.ambient_dim()) + ":" + std::to_string(sp.dim()) + ":";
  for (Code c : sp.flat_basis()) {
    key.push_back(static_cast<char>(c & 0xff));
    key.push_back(static_cast<char>(c >> 8));
  }
  return key;
}

void GraphInstance::index_vertices() {
  index_.reserve(vertices_.size());
  sizes_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    index_.emplace(vertex_key(vertices_[i]), i);
    sizes_.push_back(vertex_size(vertices_[i]));
  }
}

int GraphInstance::diameter() const noexcept {
  switch (family_) {
    case Family::Johnson: return std::min(params_.e, params_.n - params_.e);
    case Family::TwistedGrassmann: return params_.e;
    case Family::DoubledOdd:
    case Family::DoubledGrassmann: return 2 * params_.e + 1;
  }
  return 0;
}

int GraphInstance::distance(std::size_t u, std::size_t v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) {
    throw Error(ErrorCode::VertexNotInGraph, "vertex index out of range");
  }
  if (u == v) return 0;
  const int su = sizes_[u];
  const int sv = sizes_[v];
  int common = 0;
  if (family_ == Family::Johnson || family_ == Family::DoubledOdd) {
    common = intersect_size(std::get<KSubset>(vertices_[u]), std::get<KSubset>(vertices_[v]));
  } else {
    common = dim_meet(std::get<Subspace>(vertices_[u]), std::get<Subspace>(vertices_[v]));
  }
  switch (family_) {
    case Family::Johnson: return params_.e - common;
    case Family::DoubledOdd:
    case Family::DoubledGrassmann: {
      const int s = std::min(su, sv);
      return 2 * (s - common) + std::abs(su - sv);
    }
    case Family::TwistedGrassmann: return (su + sv - 2 * common) / 2;
  }
  return 0;
}

int GraphInstance::distance(const Vertex& a, const Vertex& b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) throw Error(ErrorCode::VertexNotInGraph, "vertex is not in the graph");
  return distance(*ia, *ib);
}

std::optional<std::size_t> GraphInstance::index_of(const Vertex& v) const {
  auto it = index_.find(vertex_key(v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GraphInstance build_graph(Family family, GraphParams params, std::uint64_t cap) {
  GraphInstance g;
  g.family_ = family;
  g.params_ = normalize_params(family, params);
  const BigInt count = vertex_count(family, g.params_);
  if (count > cap) {
    throw Error(ErrorCode::TooLarge, std::string(family_name(family)) + " has " + count.str() +
                                         " vertices, above the cap of " + std::to_string(cap));
  }
  const auto& p = g.params_;
  g.vertices_.reserve(static_cast<std::size_t>(count));
  switch (family) {
    case Family::Johnson:
      for (auto& s : enumerate_ksubsets(p.n, p.e)) g.vertices_.emplace_back(std::move(s));
      break;
    case Family::DoubledOdd:
      for (int k : {p.e, p.e + 1})
        for (auto& s : enumerate_ksubsets(p.n, k)) g.vertices_.emplace_back(std::move(s));
      break;
    case Family::DoubledGrassmann:
      g.field_ = field_of_order(p.q);
      for (int k : {p.e, p.e + 1})
        for (auto& s : enumerate_subspaces(g.field_, p.n, k)) g.vertices_.emplace_back(std::move(s));
      break;
    case Family::TwistedGrassmann: {
      g.field_ = field_of_order(p.q);
      Matrix h;
      for (int i = 0; i < p.n - 1; ++i) {
        Vec v(static_cast<std::size_t>(p.n), 0);
        v[static_cast<std::size_t>(i)] = 1;
        h.push_back(std::move(v));
      }
      g.hyperplane_ = canonical_subspace(g.field_, p.n, h);
      for (auto& s : enumerate_subspaces(g.field_, p.n, p.e + 1))
        if (!inside_hyperplane(s)) g.vertices_.emplace_back(std::move(s));
      for (auto& s : enumerate_subspaces(g.field_, p.n, p.e - 1))
        if (inside_hyperplane(s)) g.vertices_.emplace_back(std::move(s));
      break;
    }
  }
  g.index_vertices();
  return g;
}

std::vector<std::vector<std::uint32_t>> adjacency(const GraphInstance& g, unsigned threads) {
  std::vector<std::vector<std::uint32_t>> adj(g.size());
  detail::parallel_for(g.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (v != u && g.distance(u, v) == 1) adj[u].push_back(static_cast<std::uint32_t>(v));
  });
  return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const GraphInstance& g, std::size_t source) {
  if (source >= g.size()) throw Error(ErrorCode::VertexNotInGraph, "source index out of range");
  return bfs_distances(adjacency(g), source);
}

std::string graph6_encode(std::size_t order, const std::vector<std::vector<std::uint32_t>>& adj) {
  if (order >= (std::size_t{1} << 18)) {
    throw Error(ErrorCode::TooLargeForFormat, "graph6 export limited to fewer than 2^18 vertices");
  }
  std::string out;
  if (order <= 62) {
    out.push_back(static_cast<char>(63 + order));
  } else if (order <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((order >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((order >> shift) & 63)));
  }
  // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
  int acc = 0;
  int bits = 0;
  auto push_bit = [&](bool b) {
    acc = (acc << 1) | (b ? 1 : 0);
    if (++bits == 6) {
      out.push_back(static_cast<char>(63 + acc));
      acc = 0;
      bits = 0;
    }
  };
  std::vector<std::uint32_t> row;
  for (std::size_t j = 1; j < order; ++j) {
    row = adj[j];
    std::sort(row.begin(), row.end());
    auto it = row.begin();
    for (std::size_t i = 0; i < j; ++i) {
      while (it != row.end() && *it < i) ++it;
      push_bit(it != row.end() && *it == i);
    }
  }
  if (bits) {
    acc <<= (6 - bits);
    out.push_back(static_cast<char>(63 + acc));
  }
  out.push_back('\n');
  return out;
}

std::string export_graph(const GraphInstance& g, ExportFormat format, unsigned threads) {
  switch (format) {
    case ExportFormat::Graph6: {
      if (g.size() >= (std::size_t{1} << 18)) {
        throw Error(ErrorCode::TooLargeForFormat, "graph6 export limited to fewer than 2^18 vertices");
      }
      return graph6_encode(g.size(), adjacency(g, threads));
    }
    case ExportFormat::EdgeList: {
      std::string out;
      const auto adj = adjacency(g, threads);
      for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::uint32_t v : adj[u])
          if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
      return out;
    }
    case ExportFormat::Json: return graph_to_json(g, threads).dump(2) + "\n";
  }
  return {};
}

}  // namespace drg
