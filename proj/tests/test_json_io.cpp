#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onematch/json_io.hpp"

using namespace onematch;

TEST_CASE("graph JSON round trip") {
  auto j = json::parse(R"({"n":4,"edges":[[2,3],[0,1]]})");
  auto g = graph_from_json(j);
  CHECK(g.n() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(graph_to_json(g).dump() == R"({"n":4,"edges":[[0,1],[2,3]]})");
  // canonical form is a fixed point
  auto again = graph_from_json(graph_to_json(g));
  CHECK(graph_to_json(again) == graph_to_json(g));
}

TEST_CASE("graph JSON rejects malformed documents") {
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[0,2]]})")),
                  std::invalid_argument);
}

TEST_CASE("matching JSON round trip") {
  auto m = matching_from_json(json::parse(R"({"edges":[[3,2],[1,0]]})"), 4);
  CHECK(m.size() == 2);
  CHECK(matching_to_json(m).dump() == R"({"edges":[[0,1],[2,3]]})");
}

TEST_CASE("drawing JSON round trip is bit-exact") {
  const std::string doc =
      R"({"vertices":[1,2,3,4],)"
      R"("edges":[{"id":0,"u":1,"v":2},{"id":1,"u":2,"v":3},{"id":2,"u":3,"v":4},)"
      R"({"id":3,"u":4,"v":1},{"id":4,"u":1,"v":3},{"id":5,"u":2,"v":4}],)"
      R"("crossings":[{"e1":4,"e2":5,"orient":0}],)"
      R"("rotations":{"1":[[0,0],[4,0],[3,1]],"2":[[1,0],[5,0],[0,1]],)"
      R"("3":[[2,0],[4,1],[1,1]],"4":[[3,0],[5,1],[2,1]]}})";
  auto d = drawing_from_json(json::parse(doc));
  CHECK(d.validate(true).ok());
  CHECK(drawing_to_json(d).dump() == doc);

  auto d2 = drawing_from_json(drawing_to_json(d));
  CHECK(drawing_to_json(d2).dump() == doc);
}

TEST_CASE("drawing JSON rejects malformed documents") {
  CHECK_THROWS_AS(drawing_from_json(json::parse(R"({"vertices":[0]})")),
                  std::invalid_argument);
  auto missing_edge = json::parse(
      R"({"vertices":[0,1],"edges":[{"id":0,"u":0,"v":1}],)"
      R"("crossings":[{"e1":0,"e2":9,"orient":0}],"rotations":{}})");
  CHECK_THROWS_AS(drawing_from_json(missing_edge), std::invalid_argument);
}
