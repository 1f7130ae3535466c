#include <doctest.h>

#include <sstream>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/io.hpp"

using namespace cei;

TEST_CASE("graph text round trip") {
  std::istringstream in("# paw\n4\n1 2\n1 3\n\n2 3\n3 4\n");
  const Graph g = parse_graph_text(in);
  CHECK(g == Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}));
  std::istringstream again(format_graph_text(g));
  CHECK(parse_graph_text(again) == g);
}

TEST_CASE("malformed graph text is rejected") {
  for (const char* bad : {"", "x\n", "3\n1 4\n", "3\n1 1\n", "3\n1\n", "3\n1 2 3\n", "0\n", "3\n-1 2\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(parse_graph_text(in), InvalidInput);
  }
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), InvalidInput);
}

TEST_CASE("family specs") {
  CHECK(parse_family_spec("path:4") == path_graph(4));
  CHECK(parse_family_spec("cycle:5") == cycle_graph(5));
  CHECK(parse_family_spec("complete:3") == complete_graph(3));
  CHECK(parse_family_spec("empty:2") == empty_graph(2));
  const std::vector<int> parts{1, 2, 2};
  CHECK(parse_family_spec("complete_multipartite:1,2,2") == complete_multipartite_graph(parts));
  CHECK(parse_family_spec("union:complete:2,complete:2") == Graph(4, {{1, 2}, {3, 4}}));
  CHECK(parse_family_spec("union:path:3,complete:2") == disjoint_union(path_graph(3), complete_graph(2)));
  CHECK(parse_family_spec("union:complete_multipartite:1,1,path:2").order() == 4);
  CHECK(looks_like_family_spec("path:3"));
  CHECK_FALSE(looks_like_family_spec("graphs/p3.txt"));
  for (const char* bad : {"path:", "path:x", "path:2,3", "star:4", "union:", "cycle:2", "union:path:2,,path:2"}) {
    CHECK_THROWS_AS(parse_family_spec(bad), InvalidInput);
  }
}

TEST_CASE("ideal text and JSON") {
  std::istringstream in("3\nx1x3^2\nx1*x2\n x2 x3 \n");
  const auto a = parse_ideal_text(in);
  CHECK(a == ideal_of(3, {{1, 0, 2}, {1, 1, 0}, {0, 1, 1}}));
  std::istringstream unit("2\n1\n");
  CHECK(parse_ideal_text(unit).is_unit());
  CHECK(parse_ideal_json(ideal_json(a)) == a);
  CHECK(ideal_json(a)["text"] == to_string(a));
  for (const char* bad : {"2\nx3\n", "2\ny1\n", "2\nx1^\n", "x\n"}) {
    std::istringstream b(bad);
    CHECK_THROWS_AS(parse_ideal_text(b), InvalidInput);
  }
  CHECK_THROWS_AS(parse_ideal_json(nlohmann::json{{"n", 2}}), InvalidInput);
  CHECK_THROWS_AS(parse_ideal_json(nlohmann::json{{"n", 2}, {"gens", {{1}}}}), InvalidInput);
  CHECK_THROWS_AS(parse_ideal_json(nlohmann::json{{"n", "two"}, {"gens", nlohmann::json::array()}}), InvalidInput);
}

TEST_CASE("Betti table layout") {
  BettiTable t(4);
  t.add(0, 2, 2);
  t.add(1, 4, 1);
  CHECK(format_betti_table(t) ==
        "       0 1\n"
        "total: 2 1\n"
        "    2: 2 .\n"
        "    3: . 1\n");
  const auto j = betti_json(t);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("decomposition JSON lists 1-based variables") {
  const auto j = decomposition_json({PrimeSupport{4, 0b1001}});
  CHECK(j["primes"][0] == nlohmann::json::array({1, 4}));
}
