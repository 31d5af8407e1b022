#include "drgmd/serialize.hpp"

#include <cstdio>
#include <limits>

#include "drgmd/error.hpp"

namespace drg {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::Malformed, (where.empty() ? "/" : where) + ": " + why);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(where, std::string("missing \"") + key + "\"");
  return *it;
}

int int_member(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer()) malformed(where + "/" + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int i = 0; i < s.dim(); ++i) {
    auto r = s.row(i);
    basis.push_back(Json(std::vector<int>(r.begin(), r.end())));
  }
  return Json{{"q", s.field()->order()}, {"n", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Json to_json(const KSubset& s) { return Json(s.elems); }

Json to_json(const Vertex& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const VectorPartition& p) {
  Json pieces = Json::array();
  for (const auto& s : p.pieces) pieces.push_back(to_json(s));
  Json type = Json::array();
  for (auto [dim, count] : p.type()) type.push_back({dim, count});
  return Json{{"n", p.ambient_dim}, {"q", p.field->order()}, {"type", std::move(type)}, {"pieces", std::move(pieces)}};
}

Json to_json(const PartitionReport& r) {
  Json j{{"passed", r.passed}, {"reason", r.reason}, {"witness_pair", nullptr}, {"witness_vector", nullptr}};
  if (r.witness_pair) j["witness_pair"] = {r.witness_pair->first, r.witness_pair->second};
  if (r.witness_vector) j["witness_vector"] = std::vector<int>(r.witness_vector->begin(), r.witness_vector->end());
  return j;
}

Json params_to_json(Family family, const GraphParams& p) {
  switch (family) {
    case Family::Johnson:
    case Family::DoubledOdd: return Json{{"n", p.n}, {"e", p.e}};
    case Family::DoubledGrassmann:
    case Family::TwistedGrassmann: return Json{{"q", p.q}, {"e", p.e}, {"n", p.n}};
  }
  return Json::object();
}

Subspace subspace_from_json(const Json& j, const std::string& where) {
  const int q = int_member(j, "q", where);
  const int n = int_member(j, "n", where);
  int p = 0;
  int m = 0;
  if (!prime_power(q, p, m) || q > kMaxFieldOrder) malformed(where + "/q", "not a supported prime power");
  if (n < 0) malformed(where + "/n", "negative dimension");
  const Json& basis = member(j, "basis", where);
  if (!basis.is_array()) malformed(where + "/basis", "expected an array of rows");
  Matrix rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string at = where + "/basis/" + std::to_string(i);
    const Json& row = basis[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      malformed(at, "expected a row of " + std::to_string(n) + " codes");
    }
    Vec v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number_integer() || row[c].get<int>() < 0 || row[c].get<int>() >= q) {
        malformed(at + "/" + std::to_string(c), "expected an element code below q");
      }
      v.push_back(static_cast<Code>(row[c].get<int>()));
    }
    rows.push_back(std::move(v));
  }
  Subspace s = canonical_subspace(field_of_order(q), n, rows);
  if (s.basis() != rows) malformed(where + "/basis", "basis is not a full-rank reduced row echelon form");
  return s;
}

KSubset ksubset_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an integer array");
  std::vector<int> elems;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) malformed(where + "/" + std::to_string(i), "expected an integer");
    elems.push_back(j[i].get<int>());
  }
  if (!std::is_sorted(elems.begin(), elems.end()) ||
      std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    malformed(where, "subset must be strictly increasing");
  }
  if (!elems.empty() && (elems.front() < 1 || elems.back() > n)) {
    malformed(where, "element outside [1, " + std::to_string(n) + "]");
  }
  return {n, std::move(elems)};
}

Vertex vertex_from_json(const GraphInstance& g, const Json& j, const std::string& where) {
  if (g.family() == Family::Johnson || g.family() == Family::DoubledOdd) {
    return ksubset_from_json(j, g.params().n, where);
  }
  Subspace s = subspace_from_json(j, where);
  if (s.field()->order() != g.params().q || s.ambient_dim() != g.params().n) {
    malformed(where, "subspace does not match the graph's q and n");
  }
  return s;
}

VectorPartition partition_from_json(const Json& j) {
  const int q = int_member(j, "q", "");
  const int n = int_member(j, "n", "");
  int p = 0;
  int m = 0;
  if (!prime_power(q, p, m) || q > kMaxFieldOrder) malformed("/q", "not a supported prime power");
  const Json& pieces = member(j, "pieces", "");
  if (!pieces.is_array()) malformed("/pieces", "expected an array");
  VectorPartition out{field_of_order(q), n, {}};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string at = "/pieces/" + std::to_string(i);
    Subspace s = subspace_from_json(pieces[i], at);
    if (s.field()->order() != q || s.ambient_dim() != n) malformed(at, "piece does not match q and n");
    out.pieces.push_back(std::move(s));
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Malformed, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json graph_to_json(const GraphInstance& g, unsigned threads) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(to_json(v));
  Json edges = Json::array();
  const auto adj = adjacency(g, threads);
  for (std::size_t u = 0; u < adj.size(); ++u)
    for (std::uint32_t v : adj[u])
      if (u < v) edges.push_back({u, v});
  return Json{{"family", family_name(g.family())},
              {"params", params_to_json(g.family(), g.params())},
              {"vertex_count", g.size()},
              {"diameter", g.diameter()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

GraphInstance graph_from_json(const Json& j, std::uint64_t cap) {
  const Json& fam = member(j, "family", "");
  if (!fam.is_string()) malformed("/family", "expected a string");
  const auto family = parse_family(fam.get<std::string>());
  if (!family) malformed("/family", "unknown family \"" + fam.get<std::string>() + "\"");
  const Json& params = member(j, "params", "");
  GraphParams p;
  p.e = int_member(params, "e", "/params");
  if (params.contains("n")) p.n = int_member(params, "n", "/params");
  if (params.contains("q")) p.q = int_member(params, "q", "/params");
  GraphInstance g = build_graph(*family, p, cap);
  if (auto it = j.find("vertices"); it != j.end()) {
    if (!it->is_array() || it->size() != g.size()) {
      malformed("/vertices", "expected " + std::to_string(g.size()) + " vertex descriptors");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string at = "/vertices/" + std::to_string(i);
      const Vertex v = vertex_from_json(g, (*it)[i], at);
      if (vertex_key(v) != vertex_key(g.vertex(i))) malformed(at, "vertex differs from the rebuilt graph");
    }
  }
  return g;
}

}  // namespace drg

namespace drg {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cell(const BoundRow& r) {
  if (const auto* b = std::get_if<BigInt>(&r.value)) return b->str();
  if (const auto* d = std::get_if<double>(&r.value)) return format_double(*d);
  return "";
}

std::vector<std::pair<std::string, std::string>> bounds_fields(const BoundsTable& t) {
  std::vector<std::pair<std::string, std::string>> f;
  f.emplace_back("family", family_name(t.family));
  const Json params = params_to_json(t.family, t.params);
  for (const auto& [k, v] : params.items()) f.emplace_back(k, v.dump());
  f.emplace_back("log_base", t.log_base == LogBase::Natural ? "e" : "2");
  for (const auto& r : t.rows) f.emplace_back(r.name, cell(r));
  return f;
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json to_json(const GraphInstance& g, const ResolvingSetSpec& s) {
  Json landmarks = Json::array();
  for (std::size_t i : s.landmarks) landmarks.push_back(to_json(g.vertex(i)));
  return Json{{"family", family_name(g.family())},
              {"params", params_to_json(g.family(), g.params())},
              {"landmarks", std::move(landmarks)},
              {"indices", s.landmarks},
              {"provenance", provenance_name(s.provenance)},
              {"multiset_count", big_to_json(s.multiset_count)}};
}

Json to_json(const ResolvingReport& r) {
  Json j{{"is_resolving", r.is_resolving},
         {"witness", nullptr},
         {"set_size", r.set_size},
         {"construction_bound", nullptr},
         {"exact_mu", nullptr}};
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  if (r.construction_bound) j["construction_bound"] = big_to_json(*r.construction_bound);
  if (r.exact_mu) j["exact_mu"] = *r.exact_mu;
  return j;
}

Json to_json(const BoundsTable& t) {
  Json rows = Json::object();
  for (const auto& r : t.rows) {
    if (const auto* b = std::get_if<BigInt>(&r.value)) {
      rows[r.name] = big_to_json(*b);
    } else if (const auto* d = std::get_if<double>(&r.value)) {
      rows[r.name] = *d;
    } else {
      rows[r.name] = nullptr;
    }
  }
  return Json{{"family", family_name(t.family)},
              {"params", params_to_json(t.family, t.params)},
              {"log_base", t.log_base == LogBase::Natural ? "e" : "2"},
              {"rows", std::move(rows)}};
}

ResolvingSetSpec landmark_set_from_json(const GraphInstance& g, const Json& j) {
  if (!j.is_object()) malformed("", "expected an object");
  if (auto it = j.find("family"); it != j.end()) {
    if (!it->is_string() || it->get<std::string>() != family_name(g.family())) {
      malformed("/family", "does not match the graph");
    }
  }
  if (auto it = j.find("params"); it != j.end()) {
    if (*it != params_to_json(g.family(), g.params())) malformed("/params", "does not match the graph");
  }
  std::optional<std::vector<std::size_t>> from_values;
  if (auto it = j.find("landmarks"); it != j.end()) {
    if (!it->is_array()) malformed("/landmarks", "expected an array of vertex descriptors");
    from_values.emplace();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "/landmarks/" + std::to_string(i);
      const auto idx = g.index_of(vertex_from_json(g, (*it)[i], at));
      if (!idx) malformed(at, "not a vertex of the graph");
      from_values->push_back(*idx);
    }
  }
  std::optional<std::vector<std::size_t>> from_indices;
  if (auto it = j.find("indices"); it != j.end()) {
    if (!it->is_array()) malformed("/indices", "expected an array of vertex indices");
    from_indices.emplace();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& v = (*it)[i];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= g.size()) {
        malformed("/indices/" + std::to_string(i), "expected a vertex index below " + std::to_string(g.size()));
      }
      from_indices->push_back(v.get<std::size_t>());
    }
  }
  if (!from_values && !from_indices) malformed("", "needs \"landmarks\" or \"indices\"");
  if (from_values && from_indices && *from_values != *from_indices) {
    malformed("/indices", "indices disagree with the landmark descriptors");
  }
  Provenance prov = Provenance::User;
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string() || !parse_provenance(it->get<std::string>())) malformed("/provenance", "unknown provenance");
    prov = *parse_provenance(it->get<std::string>());
  }
  ResolvingSetSpec spec = make_landmark_set(g, from_values ? *from_values : *from_indices, prov);
  if (auto it = j.find("multiset_count"); it != j.end()) {
    if (it->is_number_unsigned()) {
      spec.multiset_count = it->get<std::uint64_t>();
    } else if (it->is_string()) {
      try {
        spec.multiset_count = BigInt(it->get<std::string>());
      } catch (const std::exception&) {
        malformed("/multiset_count", "not an integer");
      }
    } else {
      malformed("/multiset_count", "not an integer");
    }
  }
  return spec;
}

std::string bounds_csv(const BoundsTable& t) {
  std::string out = "field,value\n";
  for (const auto& [k, v] : bounds_fields(t)) out += k + "," + v + "\n";
  return out;
}

std::string bounds_text(const BoundsTable& t) {
  const auto fields = bounds_fields(t);
  std::size_t width = 0;
  for (const auto& f : fields) width = std::max(width, f.first.size());
  std::string out;
  for (const auto& [k, v] : fields) {
    out += k + std::string(width - k.size() + 2, ' ') + (v.empty() ? "-" : v) + "\n";
  }
  return out;
}

}  // namespace drg
