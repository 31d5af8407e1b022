#include "drgmd/drgmd.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "drgmd/error.hpp"
#include "drgmd/serialize.hpp"

struct drg_graph {
  drg::GraphInstance g;
};

struct drg_landmarks {
  drg::ResolvingSetSpec spec;
};

struct drg_report {
  drg::ResolvingReport report;
};

namespace {

thread_local std::string last_error;

drg_status to_status(drg::ErrorCode code) {
  using drg::ErrorCode;
  switch (code) {
    case ErrorCode::BadParams: return DRG_E_BAD_PARAMS;
    case ErrorCode::NotPrime: return DRG_E_NOT_PRIME;
    case ErrorCode::TooLarge: return DRG_E_TOO_LARGE;
    case ErrorCode::TooMany: return DRG_E_TOO_MANY;
    case ErrorCode::ZeroInverse: return DRG_E_ZERO_INVERSE;
    case ErrorCode::AmbientMismatch: return DRG_E_AMBIENT_MISMATCH;
    case ErrorCode::VertexNotInGraph: return DRG_E_VERTEX_NOT_IN_GRAPH;
    case ErrorCode::TooLargeForFormat: return DRG_E_TOO_LARGE_FOR_FORMAT;
    case ErrorCode::Malformed: return DRG_E_MALFORMED;
  }
  return DRG_E_INTERNAL;
}

template <class Fn>
drg_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const drg::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DRG_E_TOO_LARGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DRG_E_INTERNAL;
  }
}

drg_status fail(drg_status status, const char* message) {
  last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

drg::Family to_family(drg_family f) {
  switch (f) {
    case DRG_JOHNSON: return drg::Family::Johnson;
    case DRG_DOUBLED_ODD: return drg::Family::DoubledOdd;
    case DRG_DOUBLED_GRASSMANN: return drg::Family::DoubledGrassmann;
    case DRG_TWISTED_GRASSMANN: return drg::Family::TwistedGrassmann;
  }
  throw drg::Error(drg::ErrorCode::BadParams, "unknown family");
}

drg_family from_family(drg::Family f) {
  switch (f) {
    case drg::Family::Johnson: return DRG_JOHNSON;
    case drg::Family::DoubledOdd: return DRG_DOUBLED_ODD;
    case drg::Family::DoubledGrassmann: return DRG_DOUBLED_GRASSMANN;
    case drg::Family::TwistedGrassmann: return DRG_TWISTED_GRASSMANN;
  }
  return DRG_JOHNSON;
}

std::uint64_t cap_or_default(std::uint64_t cap) { return cap ? cap : drg_default_vertex_cap(); }

}  // namespace

extern "C" {

const char* drg_status_name(drg_status status) {
  switch (status) {
    case DRG_OK: return "ok";
    case DRG_E_BAD_PARAMS: return "bad-params";
    case DRG_E_TOO_LARGE: return "too-large";
    case DRG_E_MALFORMED: return "malformed";
    case DRG_E_NOT_PRIME: return "not-prime";
    case DRG_E_TOO_MANY: return "too-many";
    case DRG_E_ZERO_INVERSE: return "zero-inverse";
    case DRG_E_AMBIENT_MISMATCH: return "ambient-mismatch";
    case DRG_E_VERTEX_NOT_IN_GRAPH: return "vertex-not-in-graph";
    case DRG_E_TOO_LARGE_FOR_FORMAT: return "too-large-for-format";
    case DRG_E_INCONCLUSIVE: return "inconclusive";
    case DRG_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* drg_last_error(void) { return last_error.c_str(); }

void drg_string_free(char* s) { std::free(s); }

drg_status drg_family_from_name(const char* name, drg_family* out) {
  if (!name || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  const auto f = drg::parse_family(name);
  if (!f) return fail(DRG_E_BAD_PARAMS, "unknown family name");
  *out = from_family(*f);
  return DRG_OK;
}

const char* drg_family_name(drg_family family) {
  switch (family) {
    case DRG_JOHNSON: return drg::family_name(drg::Family::Johnson);
    case DRG_DOUBLED_ODD: return drg::family_name(drg::Family::DoubledOdd);
    case DRG_DOUBLED_GRASSMANN: return drg::family_name(drg::Family::DoubledGrassmann);
    case DRG_TWISTED_GRASSMANN: return drg::family_name(drg::Family::TwistedGrassmann);
  }
  return "unknown";
}

uint64_t drg_default_vertex_cap(void) {
  if (const char* env = std::getenv("DRG_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return drg::kDefaultVertexCap;
}

drg_status drg_graph_build(drg_family family, drg_params params, uint64_t max_vertices, drg_graph** out) {
  if (!out) return fail(DRG_E_BAD_PARAMS, "null output handle");
  return guarded([&] {
    auto g = drg::build_graph(to_family(family), {params.n, params.e, params.q}, cap_or_default(max_vertices));
    *out = new drg_graph{std::move(g)};
    return DRG_OK;
  });
}

drg_status drg_graph_from_json(const char* text, uint64_t max_vertices, drg_graph** out) {
  if (!text || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    auto g = drg::graph_from_json(drg::parse_json_text(text), cap_or_default(max_vertices));
    *out = new drg_graph{std::move(g)};
    return DRG_OK;
  });
}

void drg_graph_free(drg_graph* g) { delete g; }

drg_family drg_graph_family(const drg_graph* g) { return from_family(g->g.family()); }

drg_params drg_graph_params(const drg_graph* g) {
  const auto& p = g->g.params();
  return {p.n, p.e, p.q};
}

uint64_t drg_graph_vertex_count(const drg_graph* g) { return g->g.size(); }

int drg_graph_diameter(const drg_graph* g) { return g->g.diameter(); }

drg_status drg_graph_distance(const drg_graph* g, uint64_t u, uint64_t v, int* out) {
  if (!g || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = g->g.distance(u, v);
    return DRG_OK;
  });
}

drg_status drg_graph_vertex_json(const drg_graph* g, uint64_t v, char** out) {
  if (!g || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  if (v >= g->g.size()) return fail(DRG_E_VERTEX_NOT_IN_GRAPH, "vertex index out of range");
  return guarded([&] {
    *out = dup_string(drg::to_json(g->g.vertex(v)).dump());
    return DRG_OK;
  });
}

drg_status drg_graph_bfs(const drg_graph* g, uint64_t source, int* out_distances) {
  if (!g || !out_distances) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto d = drg::bfs_distances(g->g, source);
    std::copy(d.begin(), d.end(), out_distances);
    return DRG_OK;
  });
}

drg_status drg_graph_export(const drg_graph* g, drg_export_format format, unsigned threads, char** out) {
  if (!g || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    drg::ExportFormat f = drg::ExportFormat::Json;
    switch (format) {
      case DRG_EXPORT_EDGE_LIST: f = drg::ExportFormat::EdgeList; break;
      case DRG_EXPORT_GRAPH6: f = drg::ExportFormat::Graph6; break;
      case DRG_EXPORT_JSON: f = drg::ExportFormat::Json; break;
      default: throw drg::Error(drg::ErrorCode::BadParams, "unknown export format");
    }
    *out = dup_string(drg::export_graph(g->g, f, threads));
    return DRG_OK;
  });
}

drg_status drg_landmarks_construct(const drg_graph* g, uint32_t u_index, drg_landmarks** out) {
  if (!g || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto c = drg::construct_for(g->g.family(), g->g.params(), u_index);
    *out = new drg_landmarks{drg::place_construction(g->g, c)};
    return DRG_OK;
  });
}

drg_status drg_landmarks_from_indices(const drg_graph* g, const uint64_t* indices, size_t count,
                                      drg_landmarks** out) {
  if (!g || !out || (count && !indices)) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    std::vector<std::size_t> idx(indices, indices + count);
    *out = new drg_landmarks{drg::make_landmark_set(g->g, std::move(idx))};
    return DRG_OK;
  });
}

drg_status drg_landmarks_from_json(const drg_graph* g, const char* text, drg_landmarks** out) {
  if (!g || !text || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = new drg_landmarks{drg::landmark_set_from_json(g->g, drg::parse_json_text(text))};
    return DRG_OK;
  });
}

void drg_landmarks_free(drg_landmarks* s) { delete s; }

size_t drg_landmarks_size(const drg_landmarks* s) { return s->spec.landmarks.size(); }

uint64_t drg_landmarks_index(const drg_landmarks* s, size_t i) { return s->spec.landmarks.at(i); }

drg_status drg_landmarks_multiset_count(const drg_landmarks* s, char** out) {
  if (!s || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = dup_string(s->spec.multiset_count.str());
    return DRG_OK;
  });
}

drg_status drg_landmarks_to_json(const drg_graph* g, const drg_landmarks* s, char** out) {
  if (!g || !s || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = dup_string(drg::to_json(g->g, s->spec).dump(2) + "\n");
    return DRG_OK;
  });
}

drg_status drg_verify(const drg_graph* g, const drg_landmarks* s, unsigned threads, drg_report** out) {
  if (!g || !s || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = new drg_report{drg::verify_resolving(g->g, s->spec, threads)};
    return DRG_OK;
  });
}

void drg_report_free(drg_report* r) { delete r; }

int drg_report_is_resolving(const drg_report* r) { return r->report.is_resolving ? 1 : 0; }

int drg_report_witness(const drg_report* r, uint64_t* u, uint64_t* v) {
  if (!r->report.witness) return 0;
  if (u) *u = r->report.witness->first;
  if (v) *v = r->report.witness->second;
  return 1;
}

drg_status drg_report_to_json(const drg_report* r, char** out) {
  if (!r || !out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    *out = dup_string(drg::to_json(r->report).dump(2) + "\n");
    return DRG_OK;
  });
}

drg_status drg_exact(const drg_graph* g, int max_k, uint64_t budget, uint64_t max_vertices, int* mu,
                     drg_landmarks** witness) {
  if (!g || !mu) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto res = drg::exact_metric_dimension(g->g, max_k, budget ? budget : drg::kDefaultSearchBudget,
                                                 max_vertices ? max_vertices : drg::kDefaultSearchVertexCap);
    if (!res.conclusive) {
      last_error = res.reason;
      return DRG_E_INCONCLUSIVE;
    }
    *mu = res.mu;
    if (witness) *witness = new drg_landmarks{drg::make_landmark_set(g->g, res.witness, drg::Provenance::Search)};
    return DRG_OK;
  });
}

drg_status drg_bounds(drg_family family, drg_params params, drg_log_base base, drg_table_format format,
                      char** out) {
  if (!out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto table = drg::bounds_table(to_family(family), {params.n, params.e, params.q},
                                         base == DRG_LOG_2 ? drg::LogBase::Two : drg::LogBase::Natural);
    switch (format) {
      case DRG_TABLE_CSV: *out = dup_string(drg::bounds_csv(table)); break;
      case DRG_TABLE_TEXT: *out = dup_string(drg::bounds_text(table)); break;
      default: *out = dup_string(drg::to_json(table).dump(2) + "\n"); break;
    }
    return DRG_OK;
  });
}

drg_status drg_partition_emit(drg_partition_kind kind, int q, int e, char** out) {
  if (!out) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto field = drg::field_of_order(q);
    drg::Json doc;
    switch (kind) {
      case DRG_PARTITION_SPREAD: doc = drg::to_json(drg::spread(field, e)); break;
      case DRG_PARTITION_E1_E: doc = drg::to_json(drg::partition_e1_e(field, e)); break;
      case DRG_PARTITION_E_1: {
        const auto hp = drg::partition_e_1(field, e);
        doc = drg::to_json(hp.partition);
        doc["hyperplane"] = drg::to_json(hp.hyperplane);
        break;
      }
      default: throw drg::Error(drg::ErrorCode::BadParams, "unknown partition kind");
    }
    *out = dup_string(doc.dump(2) + "\n");
    return DRG_OK;
  });
}

drg_status drg_partition_verify(const char* text, int* passed, char** report_json) {
  if (!text || !passed) return fail(DRG_E_BAD_PARAMS, "null argument");
  return guarded([&] {
    const auto rep = drg::verify_partition(drg::partition_from_json(drg::parse_json_text(text)));
    *passed = rep.passed ? 1 : 0;
    if (report_json) *report_json = dup_string(drg::to_json(rep).dump(2) + "\n");
    return DRG_OK;
  });
}

}  // extern "C"
