// drgmd: build graphs, emit and verify resolving sets, search for the metric
// dimension and tabulate bounds. Talks to the library only through drgmd.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "drgmd/drgmd.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kBadParams = 2, kTooLarge = 3, kMalformed = 4, kInternal = 70 };

struct Owned {
  char* p = nullptr;
  ~Owned() { drg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  drg_graph* g = nullptr;
  ~GraphHandle() { drg_graph_free(g); }
};
struct SetHandle {
  drg_landmarks* s = nullptr;
  ~SetHandle() { drg_landmarks_free(s); }
};
struct ReportHandle {
  drg_report* r = nullptr;
  ~ReportHandle() { drg_report_free(r); }
};

struct Failure {
  int exit_code;
};

int exit_for(drg_status st) {
  switch (st) {
    case DRG_OK: return kOk;
    case DRG_E_BAD_PARAMS:
    case DRG_E_NOT_PRIME:
    case DRG_E_VERTEX_NOT_IN_GRAPH:
    case DRG_E_AMBIENT_MISMATCH:
    case DRG_E_ZERO_INVERSE: return kBadParams;
    case DRG_E_TOO_LARGE:
    case DRG_E_TOO_MANY:
    case DRG_E_TOO_LARGE_FOR_FORMAT: return kTooLarge;
    case DRG_E_MALFORMED: return kMalformed;
    case DRG_E_INCONCLUSIVE: return kNegative;
    case DRG_E_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(drg_status st, const char* what) {
  if (st == DRG_OK) return;
  std::cerr << "drgmd: " << what << ": " << drg_status_name(st) << ": " << drg_last_error() << "\n";
  throw Failure{exit_for(st)};
}

struct GraphArgs {
  std::string family;
  int n = 0;
  int e = 0;
  int q = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--family", a.family, "johnson | doubled-odd | doubled-grassmann | twisted-grassmann")
      ->required();
  cmd->add_option("--n", a.n, "ground-set size (johnson, default 2e+1); fixed at 2e+1 elsewhere");
  cmd->add_option("--e", a.e, "family parameter e")->required();
  cmd->add_option("--q", a.q, "field order (Grassmann families)");
}

drg_family family_of(const GraphArgs& a) {
  drg_family f;
  check(drg_family_from_name(a.family.c_str(), &f), "family");
  return f;
}

drg_params params_of(const GraphArgs& a) { return {a.n, a.e, a.q}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "drgmd: cannot read " << path << "\n";
    throw Failure{kMalformed};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "drgmd: cannot write " << path << "\n";
    throw Failure{kBadParams};
  }
  out << data;
}

Json parse(const std::string& text) { return Json::parse(text); }

std::string as_text(const Json& j) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : j.items()) {
    out += k + std::string(width - k.size() + 2, ' ') + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return out;
}

// Verdict summary shared by resolve and verify.
Json summary(const Json& set, const Json& report) {
  return Json{{"family", set["family"]},
              {"params", set["params"]},
              {"provenance", set["provenance"]},
              {"set_size", report["set_size"]},
              {"multiset_count", set["multiset_count"]},
              {"construction_bound", report["construction_bound"]},
              {"is_resolving", report["is_resolving"]},
              {"witness", report["witness"]}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving sets and metric dimension of distance-regular graph families"};
  app.require_subcommand(1);
  unsigned threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  GraphArgs build_args;
  std::string build_format = "json";
  auto* build = app.add_subcommand("build", "build a graph and export it");
  add_graph_options(build, build_args);
  build->add_option("--format", build_format, "json | graph6 | edge-list")
      ->check(CLI::IsMember({"json", "graph6", "edge-list"}));
  build->add_option("--out", out_path, "output file (default stdout)");

  GraphArgs resolve_args;
  std::string resolve_format = "json";
  std::string set_out;
  unsigned u_index = 0;
  auto* resolve = app.add_subcommand("resolve", "materialize the family's resolving set and verify it");
  add_graph_options(resolve, resolve_args);
  resolve->add_option("--u-index", u_index, "alternative auxiliary subspace U (Grassmann families)");
  resolve->add_option("--format", resolve_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  resolve->add_option("--out", out_path, "output file (default stdout)");
  resolve->add_option("--set-out", set_out, "also write the landmark set JSON here");

  std::string graph_file;
  std::string set_file;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "verify a landmark set against an exported graph");
  verify->add_option("--graph", graph_file, "graph JSON (from build --format json)")->required();
  verify->add_option("--set", set_file, "landmark set JSON")->required();
  verify->add_option("--format", verify_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "output file (default stdout)");

  GraphArgs exact_args;
  int max_k = 0;
  std::uint64_t budget = 0;
  std::uint64_t search_cap = 0;
  std::string exact_format = "json";
  auto* exact = app.add_subcommand("exact", "exact metric dimension by exhaustive search");
  add_graph_options(exact, exact_args);
  exact->add_option("--max-k", max_k, "largest set size to try (0 = |V|-1)");
  exact->add_option("--budget", budget, "search node budget (0 = default)");
  exact->add_option("--max-vertices", search_cap, "vertex cap for the search (0 = 512)");
  exact->add_option("--format", exact_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  exact->add_option("--out", out_path, "output file (default stdout)");

  GraphArgs bounds_args;
  std::string log_base = "e";
  std::string bounds_format = "text";
  auto* bounds = app.add_subcommand("bounds", "bound comparison table");
  add_graph_options(bounds, bounds_args);
  bounds->add_option("--log-base", log_base, "e | 2")->check(CLI::IsMember({"e", "2"}));
  bounds->add_option("--format", bounds_format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  bounds->add_option("--out", out_path, "output file (default stdout)");

  std::string kind = "spread";
  int part_q = 0;
  int part_e = 0;
  std::string part_verify;
  auto* partition = app.add_subcommand("partition", "emit or verify a vector-space partition");
  partition->add_option("--kind", kind, "spread | e1-e | e-1")->check(CLI::IsMember({"spread", "e1-e", "e-1"}));
  partition->add_option("--q", part_q, "field order");
  partition->add_option("--e", part_e, "e (m for a spread of F_q^{2m})");
  partition->add_option("--verify", part_verify, "verify this partition JSON instead of emitting");
  partition->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParams;
  }

  try {
    if (*build) {
      GraphHandle g;
      check(drg_graph_build(family_of(build_args), params_of(build_args), 0, &g.g), "build");
      const drg_export_format fmt = build_format == "graph6"      ? DRG_EXPORT_GRAPH6
                                    : build_format == "edge-list" ? DRG_EXPORT_EDGE_LIST
                                                                  : DRG_EXPORT_JSON;
      Owned text;
      check(drg_graph_export(g.g, fmt, threads, &text.p), "export");
      write_output(out_path, text.str());
      return kOk;
    }

    if (*resolve) {
      GraphHandle g;
      check(drg_graph_build(family_of(resolve_args), params_of(resolve_args), 0, &g.g), "build");
      SetHandle s;
      check(drg_landmarks_construct(g.g, u_index, &s.s), "construct");
      ReportHandle r;
      check(drg_verify(g.g, s.s, threads, &r.r), "verify");
      Owned set_json;
      Owned report_json;
      check(drg_landmarks_to_json(g.g, s.s, &set_json.p), "serialize");
      check(drg_report_to_json(r.r, &report_json.p), "serialize");
      if (!set_out.empty()) write_output(set_out, set_json.str());
      const Json set = parse(set_json.str());
      const Json report = parse(report_json.str());
      if (resolve_format == "text") {
        write_output(out_path, as_text(summary(set, report)));
      } else {
        write_output(out_path, Json{{"summary", summary(set, report)}, {"set", set}, {"report", report}}.dump(2) + "\n");
      }
      return drg_report_is_resolving(r.r) ? kOk : kNegative;
    }

    if (*verify) {
      GraphHandle g;
      check(drg_graph_from_json(read_file(graph_file).c_str(), 0, &g.g), graph_file.c_str());
      SetHandle s;
      check(drg_landmarks_from_json(g.g, read_file(set_file).c_str(), &s.s), set_file.c_str());
      ReportHandle r;
      check(drg_verify(g.g, s.s, threads, &r.r), "verify");
      Owned set_json;
      Owned report_json;
      check(drg_landmarks_to_json(g.g, s.s, &set_json.p), "serialize");
      check(drg_report_to_json(r.r, &report_json.p), "serialize");
      const Json sum = summary(parse(set_json.str()), parse(report_json.str()));
      write_output(out_path, verify_format == "text" ? as_text(sum) : sum.dump(2) + "\n");
      return drg_report_is_resolving(r.r) ? kOk : kNegative;
    }

    if (*exact) {
      GraphHandle g;
      check(drg_graph_build(family_of(exact_args), params_of(exact_args), 0, &g.g), "build");
      int mu = 0;
      SetHandle w;
      check(drg_exact(g.g, max_k, budget, search_cap, &mu, &w.s), "exact");
      Owned set_json;
      check(drg_landmarks_to_json(g.g, w.s, &set_json.p), "serialize");
      const Json set = parse(set_json.str());
      const Json doc{{"family", set["family"]},
                     {"params", set["params"]},
                     {"vertex_count", drg_graph_vertex_count(g.g)},
                     {"mu", mu},
                     {"witness", set["landmarks"]},
                     {"witness_indices", set["indices"]}};
      write_output(out_path, exact_format == "text" ? as_text(doc) : doc.dump(2) + "\n");
      return kOk;
    }

    if (*bounds) {
      const drg_table_format fmt = bounds_format == "json" ? DRG_TABLE_JSON
                                   : bounds_format == "csv" ? DRG_TABLE_CSV
                                                            : DRG_TABLE_TEXT;
      Owned text;
      check(drg_bounds(family_of(bounds_args), params_of(bounds_args), log_base == "2" ? DRG_LOG_2 : DRG_LOG_E, fmt,
                       &text.p),
            "bounds");
      write_output(out_path, text.str());
      return kOk;
    }

    if (*partition) {
      if (!part_verify.empty()) {
        int passed = 0;
        Owned report;
        check(drg_partition_verify(read_file(part_verify).c_str(), &passed, &report.p), part_verify.c_str());
        write_output(out_path, report.str());
        return passed ? kOk : kNegative;
      }
      const drg_partition_kind k = kind == "e1-e" ? DRG_PARTITION_E1_E
                                   : kind == "e-1" ? DRG_PARTITION_E_1
                                                   : DRG_PARTITION_SPREAD;
      Owned text;
      check(drg_partition_emit(k, part_q, part_e, &text.p), "partition");
      write_output(out_path, text.str());
      return kOk;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "drgmd: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
