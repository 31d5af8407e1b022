#include <map>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "drgmd/error.hpp"
#include "drgmd/families.hpp"
#include "oracles.hpp"

using drg::Family;
using drg::GraphParams;

namespace {

struct Instance {
  Family family;
  GraphParams params;
};

const std::vector<Instance> kOracleInstances = {
    {Family::Johnson, {5, 2, 0}},          {Family::Johnson, {7, 3, 0}},
    {Family::DoubledOdd, {0, 1, 0}},       {Family::DoubledOdd, {0, 2, 0}},
    {Family::DoubledOdd, {0, 3, 0}},       {Family::DoubledGrassmann, {0, 2, 2}},
    {Family::TwistedGrassmann, {0, 2, 2}},
};

drg::ErrorCode error_of(Family f, GraphParams p) {
  try {
    (void)drg::build_graph(f, p);
  } catch (const drg::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return drg::ErrorCode::Malformed;
}

}  // namespace

TEST_CASE("vertex counts") {
  REQUIRE(drg::build_graph(Family::Johnson, {7, 3, 0}).size() == 35);
  REQUIRE(drg::build_graph(Family::DoubledOdd, {0, 2, 0}).size() == 20);
  REQUIRE(drg::build_graph(Family::DoubledGrassmann, {0, 2, 2}).size() == 310);
  const auto tw = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  REQUIRE(tw.size() == 155);
  // B1 = 3-spaces not inside H, B2 = lines inside H.
  const auto& h = *tw.hyperplane();
  int b1 = 0, b2 = 0;
  for (const auto& v : tw.vertices()) {
    const auto& s = std::get<drg::Subspace>(v);
    if (s.dim() == 3 && !drg::is_contained(s, h)) ++b1;
    if (s.dim() == 1 && drg::is_contained(s, h)) ++b2;
  }
  REQUIRE(b1 == static_cast<int>(oracle::gaussian(5, 3, 2) - oracle::gaussian(4, 3, 2)));
  REQUIRE(b1 == 140);
  REQUIRE(b2 == 15);
  // B1 first, then B2.
  REQUIRE(std::get<drg::Subspace>(tw.vertex(139)).dim() == 3);
  REQUIRE(std::get<drg::Subspace>(tw.vertex(140)).dim() == 1);
  for (auto inst : kOracleInstances)
    REQUIRE(drg::vertex_count(inst.family, drg::normalize_params(inst.family, inst.params)) ==
            drg::build_graph(inst.family, inst.params).size());
}

TEST_CASE("distance examples") {
  const auto j = drg::build_graph(Family::Johnson, {7, 3, 0});
  const drg::Vertex a = drg::make_ksubset(7, {1, 2, 3});
  REQUIRE(j.distance(a, a) == 0);
  const auto o = drg::build_graph(Family::DoubledOdd, {0, 2, 0});
  REQUIRE(o.distance(drg::Vertex(drg::make_ksubset(5, {1, 2})), drg::Vertex(drg::make_ksubset(5, {3, 4, 5}))) == 5);
  const auto tw = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  const auto f = drg::make_field(2, 1);
  const drg::Vertex p = drg::canonical_subspace(f, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}});
  const drg::Vertex q = drg::canonical_subspace(f, 5, {{1, 0, 0, 0, 0}});
  const drg::Vertex r = drg::canonical_subspace(f, 5, {{0, 0, 1, 0, 0}});
  REQUIRE(tw.distance(p, q) == 1);  // (3 + 1 - 2) / 2
  REQUIRE(tw.distance(p, r) == 2);  // (3 + 1 - 0) / 2
  // A 2-space is not a vertex of the twisted graph.
  try {
    (void)tw.distance(p, drg::Vertex(drg::canonical_subspace(f, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}})));
    FAIL("expected VertexNotInGraph");
  } catch (const drg::Error& e) {
    REQUIRE(e.code() == drg::ErrorCode::VertexNotInGraph);
  }
}

TEST_CASE("closed-form distances agree with BFS over independently built adjacency") {
  for (const auto& inst : kOracleInstances) {
    const auto g = drg::build_graph(inst.family, inst.params);
    CAPTURE(drg::family_name(inst.family));
    CAPTURE(g.size());
    const auto ref = oracle::explicit_graph(g).all_pairs();
    const auto adj = drg::adjacency(g, 2);
    for (std::size_t u = 0; u < g.size(); ++u) {
      const auto lib_bfs = drg::bfs_distances(g, u);
      const auto adj_bfs = drg::bfs_distances(adj, u);
      for (std::size_t v = 0; v < g.size(); ++v) {
        REQUIRE(adj_bfs[v] == ref[u][v]);
        REQUIRE(ref[u][v] >= 0);
        REQUIRE(g.distance(u, v) == ref[u][v]);
        REQUIRE(lib_bfs[v] == ref[u][v]);
      }
    }
  }
}

TEST_CASE("diameters") {
  auto max_dist = [](const drg::GraphInstance& g) {
    int d = 0;
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v) d = std::max(d, g.distance(u, v));
    return d;
  };
  for (const auto& inst : kOracleInstances) {
    const auto g = drg::build_graph(inst.family, inst.params);
    const int e = g.params().e;
    REQUIRE(g.diameter() == max_dist(g));
    if (inst.family == Family::DoubledOdd || inst.family == Family::DoubledGrassmann) REQUIRE(g.diameter() == 2 * e + 1);
    else REQUIRE(g.diameter() == e);
  }
  REQUIRE(drg::build_graph(Family::Johnson, {7, 5, 0}).diameter() == 2);
  REQUIRE(max_dist(drg::build_graph(Family::Johnson, {7, 5, 0})) == 2);
}

TEST_CASE("hexagon and triangle") {
  const auto hex = drg::build_graph(Family::DoubledOdd, {0, 1, 0});
  REQUIRE(hex.size() == 6);
  for (std::size_t u = 0; u < 6; ++u) {
    const auto d = drg::bfs_distances(hex, u);
    REQUIRE(*std::max_element(d.begin(), d.end()) == 3);
  }
  std::istringstream edges(drg::export_graph(hex, drg::ExportFormat::EdgeList));
  std::string line;
  int count = 0;
  while (std::getline(edges, line)) count += !line.empty();
  REQUIRE(count == 6);

  const auto tri = drg::build_graph(Family::Johnson, {3, 2, 0});
  for (std::size_t u = 0; u < 3; ++u)
    for (int d : drg::bfs_distances(tri, u)) REQUIRE(d <= 1);
  REQUIRE(drg::export_graph(tri, drg::ExportFormat::Graph6) == "Bw\n");
  REQUIRE(drg::export_graph(tri, drg::ExportFormat::EdgeList) == "0 1\n0 2\n1 2\n");
}

TEST_CASE("graph6 encoding") {
  // The 5-cycle 0-1-2-3-4-0 is "Dhc" (as produced by networkx), and 63
  // vertices need the long size header "~" + three 6-bit groups.
  std::vector<std::vector<std::uint32_t>> c5(5);
  for (std::uint32_t i = 0; i < 5; ++i) {
    c5[i].push_back((i + 1) % 5);
    c5[(i + 1) % 5].push_back(i);
  }
  REQUIRE(drg::graph6_encode(5, c5) == "Dhc\n");
  const auto big = drg::graph6_encode(63, std::vector<std::vector<std::uint32_t>>(63));
  REQUIRE(big.substr(0, 4) == std::string("~??~"));
  REQUIRE(drg::graph6_encode(0, {}) == "?\n");
  // Johnson(7,3) has 35 vertices: one header byte 35 + 63.
  const auto j = drg::export_graph(drg::build_graph(Family::Johnson, {7, 3, 0}), drg::ExportFormat::Graph6);
  REQUIRE(j[0] == static_cast<char>(35 + 63));
  REQUIRE(j.size() == 1 + (35 * 34 / 2 + 5) / 6 + 1);
}

TEST_CASE("Johnson(5,2) has 30 edges, every vertex of degree 6") {
  const auto g = drg::build_graph(Family::Johnson, {5, 2, 0});
  const auto adj = drg::adjacency(g);
  std::size_t twice = 0;
  for (const auto& a : adj) {
    REQUIRE(a.size() == 6);
    twice += a.size();
  }
  REQUIRE(twice / 2 == 30);
}

TEST_CASE("triangle inequality and symmetry on sampled triples") {
  std::mt19937 rng(3);
  for (const auto& inst : kOracleInstances) {
    const auto g = drg::build_graph(inst.family, inst.params);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int t = 0; t < 10000; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(g.distance(a, b) == g.distance(b, a));
      REQUIRE(g.distance(a, c) <= g.distance(a, b) + g.distance(b, c));
      REQUIRE((g.distance(a, b) == 0) == (a == b));
    }
  }
}

TEST_CASE("twisted Grassmann graph (q=2, e=2) is distance-regular") {
  const auto g = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  const auto adj = drg::adjacency(g);
  // For each distance d, (c_d, a_d, b_d) must be the same for all pairs at distance d.
  std::map<int, std::tuple<int, int, int>> seen;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) {
      const int d = g.distance(u, v);
      int c = 0, a = 0, b = 0;
      for (auto w : adj[v]) {
        const int dw = g.distance(u, w);
        c += dw == d - 1;
        a += dw == d;
        b += dw == d + 1;
      }
      const auto triple = std::make_tuple(c, a, b);
      auto [it, fresh] = seen.emplace(d, triple);
      if (!fresh) REQUIRE(it->second == triple);
    }
  REQUIRE(seen.size() == 3);
  // Same intersection array as the Grassmann graph J_2(5,2): {42, 24; 1, 9}.
  REQUIRE(std::get<2>(seen[0]) == 42);
  REQUIRE(std::get<2>(seen[1]) == 24);
  REQUIRE(std::get<0>(seen[1]) == 1);
  REQUIRE(std::get<0>(seen[2]) == 9);
}

TEST_CASE("parameter validation and caps") {
  REQUIRE(error_of(Family::Johnson, {5, 0, 0}) == drg::ErrorCode::BadParams);
  REQUIRE(error_of(Family::Johnson, {5, 5, 0}) == drg::ErrorCode::BadParams);
  REQUIRE(error_of(Family::DoubledOdd, {6, 2, 0}) == drg::ErrorCode::BadParams);
  REQUIRE(error_of(Family::DoubledGrassmann, {0, 2, 6}) == drg::ErrorCode::BadParams);
  REQUIRE(error_of(Family::TwistedGrassmann, {0, 1, 2}) == drg::ErrorCode::BadParams);
  try {
    (void)drg::build_graph(Family::DoubledGrassmann, {0, 3, 3}, 1000);
    FAIL("expected TooLarge");
  } catch (const drg::Error& e) {
    REQUIRE(e.code() == drg::ErrorCode::TooLarge);
  }
  REQUIRE(drg::parse_family("twisted-grassmann") == Family::TwistedGrassmann);
  REQUIRE_FALSE(drg::parse_family("grassmann").has_value());
}

TEST_CASE("index_of finds every vertex") {
  const auto g = drg::build_graph(Family::DoubledGrassmann, {0, 1, 3});
  REQUIRE(g.size() == 26);
  for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(g.index_of(g.vertex(i)) == i);
  const auto j = drg::build_graph(Family::Johnson, {6, 3, 0});
  for (std::size_t i = 0; i < j.size(); ++i) REQUIRE(j.index_of(j.vertex(i)) == i);
}
