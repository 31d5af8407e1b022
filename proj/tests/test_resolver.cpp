#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "drgmd/error.hpp"
#include "drgmd/partitions.hpp"
#include "drgmd/resolver.hpp"
#include "oracles.hpp"

using drg::Family;
using drg::GraphParams;

namespace {

std::vector<std::vector<int>> sorted_sets(const drg::Construction& c) {
  std::vector<std::vector<int>> out;
  for (const auto& m : c.members) out.push_back(std::get<drg::KSubset>(m).elems);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Landmarks for the doubled-Grassmann construction computed from point sets:
// every e-space W with W ⊆ U + Y_i for some non-X piece Y_i, or W ⊆ X.
std::set<drg::Subspace> doubled_grassmann_oracle(int q, int e) {
  const auto f = drg::field_of_order(q);
  const int n = 2 * e + 1;
  oracle::SpanCalc sc{f, n};
  const auto part = drg::partition_e1_e(f, e);
  const auto x_pts = sc.span(part.pieces[0]);
  const auto u = drg::subspaces_within(part.pieces[0], 1).front();
  std::vector<std::set<std::uint64_t>> uy;
  for (std::size_t i = 1; i < part.pieces.size(); ++i) {
    std::vector<std::vector<int>> gens;
    for (const auto* s : {&u, &part.pieces[i]})
      for (int r = 0; r < s->dim(); ++r) gens.emplace_back(s->row(r).begin(), s->row(r).end());
    uy.push_back(sc.span(gens));
  }
  std::set<drg::Subspace> out;
  for (const auto& w : drg::enumerate_subspaces(f, n, e)) {
    const auto pts = sc.span(w);
    bool hit = subset_of(pts, x_pts);
    for (std::size_t i = 0; i < uy.size() && !hit; ++i) hit = subset_of(pts, uy[i]);
    if (hit) out.insert(w);
  }
  return out;
}

// Landmarks for the twisted construction from point sets: (e+1)-spaces
// W ≠ U inside some U + Y (Y an external line), and (e-1)-spaces inside some
// spread piece of H.
std::set<drg::Subspace> twisted_oracle(int q, int e) {
  const auto f = drg::field_of_order(q);
  const int n = 2 * e + 1;
  oracle::SpanCalc sc{f, n};
  const auto hp = drg::partition_e_1(f, e);
  // U = span of the first e+1 unit vectors.
  drg::Matrix ub;
  for (int i = 0; i <= e; ++i) {
    drg::Vec v(static_cast<std::size_t>(n), 0);
    v[i] = 1;
    ub.push_back(v);
  }
  const auto u = drg::canonical_subspace(f, n, ub);
  std::vector<std::set<std::uint64_t>> uy, xs;
  for (std::size_t i = 0; i < hp.partition.pieces.size(); ++i) {
    const auto& piece = hp.partition.pieces[i];
    if (i < hp.spread_pieces) {
      xs.push_back(sc.span(piece));
      continue;
    }
    std::vector<std::vector<int>> gens;
    for (const auto* s : {&u, &piece})
      for (int r = 0; r < s->dim(); ++r) gens.emplace_back(s->row(r).begin(), s->row(r).end());
    uy.push_back(sc.span(gens));
  }
  std::set<drg::Subspace> out;
  for (const auto& w : drg::enumerate_subspaces(f, n, e + 1)) {
    if (w == u) continue;
    const auto pts = sc.span(w);
    for (const auto& s : uy)
      if (subset_of(pts, s)) {
        out.insert(w);
        break;
      }
  }
  for (const auto& w : drg::enumerate_subspaces(f, n, e - 1)) {
    const auto pts = sc.span(w);
    for (const auto& s : xs)
      if (subset_of(pts, s)) {
        out.insert(w);
        break;
      }
  }
  return out;
}

std::set<drg::Subspace> member_set(const drg::Construction& c) {
  std::set<drg::Subspace> out;
  for (const auto& m : c.members) out.insert(std::get<drg::Subspace>(m));
  return out;
}

}  // namespace

TEST_CASE("Johnson construction") {
  const auto c = drg::construct_johnson_set(3);
  REQUIRE(c.members.size() == 6);
  REQUIRE(c.multiset_count == 6);
  REQUIRE(sorted_sets(c) == std::vector<std::vector<int>>{{1, 2, 7}, {1, 3, 7}, {2, 3, 7}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  for (int e : {3, 4, 5}) {
    const auto g = drg::build_graph(Family::Johnson, {2 * e + 1, e, 0});
    const auto cons = drg::construct_johnson_set(e);
    REQUIRE(cons.members.size() == static_cast<std::size_t>(2 * e));
    const auto rep = drg::verify_resolving(g, drg::place_construction(g, cons));
    REQUIRE(rep.is_resolving);
    REQUIRE(rep.set_size == static_cast<std::size_t>(2 * e));
  }
  CHECK_THROWS_AS(drg::construct_johnson_set(2), drg::Error);
}

TEST_CASE("doubled Odd construction") {
  const auto c = drg::construct_doubled_odd_set(2);
  REQUIRE(sorted_sets(c) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}});
  for (int e : {2, 3, 4}) {
    const auto g = drg::build_graph(Family::DoubledOdd, {0, e, 0});
    const auto cons = drg::construct_doubled_odd_set(e);
    REQUIRE(cons.members.size() == static_cast<std::size_t>(2 * e + 1));
    REQUIRE(drg::verify_resolving(g, drg::place_construction(g, cons)).is_resolving);
  }
  CHECK_THROWS_AS(drg::construct_doubled_odd_set(1), drg::Error);
}

TEST_CASE("doubled Grassmann construction matches the point-set oracle") {
  const auto c = drg::construct_doubled_grassmann_set(2, 2);
  REQUIRE(c.multiset_count == 63);
  REQUIRE(member_set(c) == doubled_grassmann_oracle(2, 2));
  REQUIRE(c.members.size() == 51);
  const auto g = drg::build_graph(Family::DoubledGrassmann, {0, 2, 2});
  const auto rep = drg::verify_resolving(g, drg::place_construction(g, c));
  REQUIRE(rep.is_resolving);
  REQUIRE(rep.set_size == 51);
  REQUIRE(rep.construction_bound == 63);

  const auto c3 = drg::construct_doubled_grassmann_set(3, 2);
  REQUIRE(c3.multiset_count == 364);
  REQUIRE(member_set(c3) == doubled_grassmann_oracle(3, 2));
  REQUIRE(c3.members.size() == 292);
  const auto g3 = drg::build_graph(Family::DoubledGrassmann, {0, 2, 3});
  REQUIRE(drg::verify_resolving(g3, drg::place_construction(g3, c3)).is_resolving);
}

TEST_CASE("twisted Grassmann construction matches the point-set oracle") {
  const auto c = drg::construct_twisted_grassmann_set(2, 2);
  REQUIRE(c.multiset_count == 239);
  REQUIRE(member_set(c) == twisted_oracle(2, 2));
  // q^{e-1}([e+2,1]_q - 1) + (q^e + 1)[e,1]_q = 2*14 + 5*3.
  REQUIRE(c.members.size() == 43);
  const auto g = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  REQUIRE(drg::verify_resolving(g, drg::place_construction(g, c)).is_resolving);

  const auto c3 = drg::construct_twisted_grassmann_set(3, 2);
  REQUIRE(c3.multiset_count == (81 * (81 - 3 + 1) - 1) / 2);
  REQUIRE(member_set(c3) == twisted_oracle(3, 2));
  REQUIRE(c3.members.size() == 3 * (oracle::gaussian(4, 1, 3) - 1) + 10 * 4);
}

TEST_CASE("alternative choices of U still resolve") {
  const auto g = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  // H has [4,3]_2 = 15 three-dimensional subspaces.
  for (std::size_t u = 0; u < 15; ++u) {
    const auto c = drg::construct_twisted_grassmann_set(2, 2, u);
    REQUIRE(drg::verify_resolving(g, drg::place_construction(g, c)).is_resolving);
  }
  CHECK_THROWS_AS(drg::construct_twisted_grassmann_set(2, 2, 15), drg::Error);
  const auto dg = drg::build_graph(Family::DoubledGrassmann, {0, 2, 2});
  for (std::size_t u = 0; u < 7; ++u) {
    const auto c = drg::construct_doubled_grassmann_set(2, 2, u);
    REQUIRE(drg::verify_resolving(dg, drg::place_construction(dg, c)).is_resolving);
  }
}

TEST_CASE("verify_resolving on the hexagon") {
  const auto hex = drg::build_graph(Family::DoubledOdd, {0, 1, 0});
  // Vertices: {1},{2},{3},{1,2},{1,3},{2,3}.
  const auto one = drg::verify_resolving(hex, drg::make_landmark_set(hex, {3}));
  REQUIRE_FALSE(one.is_resolving);
  REQUIRE(one.witness.has_value());
  REQUIRE(*one.witness == std::pair<std::size_t, std::size_t>{0, 1});
  REQUIRE(drg::verify_resolving(hex, drg::make_landmark_set(hex, {0, 3})).is_resolving);
  std::vector<std::size_t> all(hex.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  REQUIRE(drg::verify_resolving(hex, drg::make_landmark_set(hex, all)).is_resolving);
}

TEST_CASE("failed verification carries a genuine collision") {
  const auto g = drg::build_graph(Family::Johnson, {7, 3, 0});
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int t = 0; t < 50; ++t) {
    std::set<std::size_t> s{pick(rng), pick(rng), pick(rng)};
    const auto rep = drg::verify_resolving(g, drg::make_landmark_set(g, {s.begin(), s.end()}));
    if (rep.is_resolving) continue;
    REQUIRE(rep.witness.has_value());
    const auto [a, b] = *rep.witness;
    REQUIRE(a < b);
    for (auto l : s) REQUIRE(g.distance(a, l) == g.distance(b, l));
  }
  const auto twice = drg::make_landmark_set(g, {4, 1, 4});
  REQUIRE(twice.landmarks == std::vector<std::size_t>{1, 4});
  REQUIRE(twice.multiset_count == 3);
  CHECK_THROWS_AS(drg::make_landmark_set(g, {35}), drg::Error);
}

TEST_CASE("monotonicity: supersets of resolving sets resolve") {
  std::mt19937 rng(99);
  const std::vector<std::pair<Family, GraphParams>> cases = {{Family::Johnson, {7, 3, 0}},
                                                             {Family::DoubledOdd, {0, 2, 0}},
                                                             {Family::DoubledGrassmann, {0, 2, 2}},
                                                             {Family::TwistedGrassmann, {0, 2, 2}}};
  for (const auto& [fam, params] : cases) {
    const auto g = drg::build_graph(fam, params);
    auto base = drg::place_construction(g, drg::construct_for(fam, g.params()));
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int t = 0; t < 20; ++t) {
      std::set<std::size_t> s(base.landmarks.begin(), base.landmarks.end());
      for (int extra = 0; extra <= t % 5; ++extra) s.insert(pick(rng));
      REQUIRE(drg::verify_resolving(g, drg::make_landmark_set(g, {s.begin(), s.end()})).is_resolving);
    }
  }
}

TEST_CASE("exact metric dimension: known values") {
  auto mu = [](Family f, GraphParams p) {
    const auto r = drg::exact_metric_dimension(drg::build_graph(f, p));
    REQUIRE(r.conclusive);
    return r.mu;
  };
  CHECK(mu(Family::Johnson, {3, 2, 0}) == 2);
  CHECK(mu(Family::Johnson, {4, 2, 0}) == 3);
  CHECK(mu(Family::Johnson, {5, 2, 0}) == 3);
  CHECK(mu(Family::Johnson, {6, 2, 0}) == 4);
  CHECK(mu(Family::Johnson, {7, 2, 0}) == 5);
  for (int n : {3, 4, 5}) CHECK(mu(Family::Johnson, {n, 1, 0}) == n - 1);
  CHECK(mu(Family::DoubledOdd, {0, 1, 0}) == 2);
  // The incidence graph of the Fano plane (Heawood graph) has metric dimension
  // 5, not q(q+1) = 6; the brute-force check below confirms it independently.
  CHECK(mu(Family::DoubledGrassmann, {0, 1, 2}) == 5);
}

TEST_CASE("exact search agrees with brute force, and its witness is minimal") {
  const std::vector<std::pair<Family, GraphParams>> cases = {
      {Family::Johnson, {5, 2, 0}}, {Family::Johnson, {6, 2, 0}},         {Family::DoubledOdd, {0, 1, 0}},
      {Family::DoubledOdd, {0, 2, 0}}, {Family::DoubledGrassmann, {0, 1, 2}}, {Family::Johnson, {6, 3, 0}}};
  for (const auto& [fam, params] : cases) {
    const auto g = drg::build_graph(fam, params);
    const auto r = drg::exact_metric_dimension(g);
    REQUIRE(r.conclusive);
    const auto dist = oracle::explicit_graph(g).all_pairs();
    REQUIRE(oracle::brute_metric_dimension(dist, r.mu) == r.mu);
    REQUIRE(r.witness.size() == static_cast<std::size_t>(r.mu));
    REQUIRE(drg::verify_resolving(g, drg::make_landmark_set(g, r.witness)).is_resolving);
    for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
      auto fewer = r.witness;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      REQUIRE_FALSE(drg::verify_resolving(g, drg::make_landmark_set(g, fewer)).is_resolving);
    }
  }
}

TEST_CASE("exact search is bounded by the constructions") {
  const auto j = drg::build_graph(Family::Johnson, {7, 3, 0});
  const auto rj = drg::exact_metric_dimension(j);
  REQUIRE(rj.conclusive);
  REQUIRE(rj.mu <= 6);
  const auto o = drg::build_graph(Family::DoubledOdd, {0, 2, 0});
  const auto ro = drg::exact_metric_dimension(o);
  REQUIRE(ro.conclusive);
  REQUIRE(ro.mu <= 5);
}

TEST_CASE("exact search reports inconclusive runs") {
  const auto g = drg::build_graph(Family::TwistedGrassmann, {0, 2, 2});
  const auto r = drg::exact_metric_dimension(g, 0, 1000);
  REQUIRE_FALSE(r.conclusive);
  REQUIRE_FALSE(r.reason.empty());
  const auto big = drg::build_graph(Family::DoubledGrassmann, {0, 2, 2});
  CHECK_THROWS_AS(drg::exact_metric_dimension(big, 0, drg::kDefaultSearchBudget, 256), drg::Error);
  const auto capped = drg::exact_metric_dimension(drg::build_graph(Family::Johnson, {5, 2, 0}), 2);
  REQUIRE_FALSE(capped.conclusive);
}

TEST_CASE("bounds table") {
  // M evaluated term by term from the q-Pascal Gaussian binomials.
  auto m_oracle = [](std::uint64_t q, int e) {
    std::uint64_t best = 0;
    for (int j = 1; j <= e; ++j)
      best = std::max(best, oracle::ipow(q, j * j) * oracle::gaussian(e + 1, j, q) * oracle::gaussian(e, j, q));
    return best;
  };
  REQUIRE(m_oracle(2, 2) == 112);
  REQUIRE(drg::babai_m(2, 2) == 112);
  for (int q : {2, 3, 4})
    for (int e : {2, 3, 4}) REQUIRE(drg::babai_m(q, e) == m_oracle(static_cast<std::uint64_t>(q), e));

  for (auto base : {drg::LogBase::Natural, drg::LogBase::Two}) {
    const auto t = drg::bounds_table(Family::TwistedGrassmann, {0, 2, 2}, base);
    auto big = [&](const char* name) { return std::get<drg::BigInt>(t.find(name)->value); };
    auto dbl = [&](const char* name) { return std::get<double>(t.find(name)->value); };
    REQUIRE(big("babai_M") == 112);
    REQUIRE(big("thm_bound") == 239);
    REQUIRE(big("multiset_count") == 239);
    REQUIRE(big("dedup_size") == 43);
    REQUIRE(big("vertex_count") == 155);
    const double lg = base == drg::LogBase::Natural ? std::log(155.0) : std::log2(155.0);
    REQUIRE(dbl("babai_general") == doctest::Approx(4 * std::sqrt(155.0) * lg).epsilon(1e-9));
    REQUIRE(dbl("babai_strong") == doctest::Approx(4 * 155.0 / (155.0 - 112.0) * lg).epsilon(1e-9));
    REQUIRE(dbl("babai_general_ln") == doctest::Approx(251.161).epsilon(1e-5));
    REQUIRE(dbl("babai_general_log2") == doctest::Approx(362.349).epsilon(1e-5));
    REQUIRE(std::holds_alternative<std::monostate>(t.find("prop_johnson")->value));
  }
  const auto j = drg::bounds_table(Family::Johnson, {7, 3, 0});
  REQUIRE(std::get<drg::BigInt>(j.find("prop_johnson")->value) == 8);
  REQUIRE(std::get<drg::BigInt>(j.find("thm_bound")->value) == 6);
  const auto j72 = drg::bounds_table(Family::Johnson, {7, 2, 0});
  REQUIRE(std::get<drg::BigInt>(j72.find("known_exact")->value) == 5);
  REQUIRE(std::holds_alternative<std::monostate>(j72.find("thm_bound")->value));
  REQUIRE(drg::bounds_table(Family::DoubledGrassmann, {0, 2, 2}).rows.size() == j.rows.size());
}
