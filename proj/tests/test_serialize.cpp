#include <functional>
#include <string>
#include <vector>

#include <doctest.h>

#include "drgmd/error.hpp"
#include "drgmd/serialize.hpp"

namespace {

drg::ErrorCode code_of(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const drg::Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  return drg::ErrorCode::BadParams;
}

}  // namespace

TEST_CASE("subspace JSON round trip") {
  const auto f = drg::make_field(3, 1);
  const auto s = drg::canonical_subspace(f, 4, {{1, 2, 0, 1}, {2, 2, 1, 0}});
  const auto j = drg::to_json(s);
  REQUIRE(j["q"] == 3);
  REQUIRE(j["n"] == 4);
  REQUIRE(drg::subspace_from_json(j, "") == s);
  REQUIRE(drg::subspace_from_json(drg::parse_json_text(j.dump()), "") == s);
}

TEST_CASE("subspace JSON must already be canonical") {
  std::string msg;
  const auto bad = drg::parse_json_text(R"({"q":2,"n":3,"basis":[[0,1,0],[1,0,0]]})");
  REQUIRE(code_of([&] { (void)drg::subspace_from_json(bad, "/x"); }, &msg) == drg::ErrorCode::Malformed);
  REQUIRE(msg.find("/x") != std::string::npos);
  const auto dep = drg::parse_json_text(R"({"q":2,"n":3,"basis":[[1,0,0],[1,0,0]]})");
  REQUIRE(code_of([&] { (void)drg::subspace_from_json(dep, ""); }) == drg::ErrorCode::Malformed);
  const auto range = drg::parse_json_text(R"({"q":2,"n":2,"basis":[[1,2]]})");
  REQUIRE(code_of([&] { (void)drg::subspace_from_json(range, "/y"); }, &msg) == drg::ErrorCode::Malformed);
  REQUIRE(msg.find("/y/basis/0/1") != std::string::npos);
}

TEST_CASE("k-subset JSON") {
  const auto k = drg::make_ksubset(7, {1, 4, 6});
  REQUIRE(drg::to_json(k).dump() == "[1,4,6]");
  REQUIRE(drg::ksubset_from_json(drg::to_json(k), 7, "") == k);
  REQUIRE(code_of([] { (void)drg::ksubset_from_json(drg::parse_json_text("[3,1]"), 7, ""); }) ==
          drg::ErrorCode::Malformed);
  REQUIRE(code_of([] { (void)drg::ksubset_from_json(drg::parse_json_text("[1,8]"), 7, ""); }) ==
          drg::ErrorCode::Malformed);
}

TEST_CASE("graph JSON round trip") {
  for (auto [fam, params] : std::vector<std::pair<drg::Family, drg::GraphParams>>{
           {drg::Family::Johnson, {6, 2, 0}}, {drg::Family::TwistedGrassmann, {0, 2, 2}}}) {
    const auto g = drg::build_graph(fam, params);
    const auto j = drg::graph_to_json(g);
    REQUIRE(j["vertex_count"] == g.size());
    const auto back = drg::graph_from_json(drg::parse_json_text(j.dump()));
    REQUIRE(back.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(drg::vertex_key(back.vertex(i)) == drg::vertex_key(g.vertex(i)));
    REQUIRE(drg::graph_to_json(back).dump() == j.dump());
  }
  auto j = drg::graph_to_json(drg::build_graph(drg::Family::Johnson, {5, 2, 0}));
  j["vertices"][3] = drg::Json::array({1, 5});
  std::string msg;
  REQUIRE(code_of([&] { (void)drg::graph_from_json(j); }, &msg) == drg::ErrorCode::Malformed);
  REQUIRE(msg.find("/vertices/3") != std::string::npos);
}

TEST_CASE("partition JSON round trip") {
  const auto p = drg::partition_e1_e(drg::make_field(2, 1), 2);
  const auto back = drg::partition_from_json(drg::parse_json_text(drg::to_json(p).dump()));
  REQUIRE(back.pieces == p.pieces);
  REQUIRE(drg::verify_partition(back).passed);
}

TEST_CASE("malformed text") {
  REQUIRE(code_of([] { (void)drg::parse_json_text("{\"a\": }"); }) == drg::ErrorCode::Malformed);
}
