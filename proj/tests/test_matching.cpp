#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "onematch/matching.hpp"
#include "oracle.hpp"

using namespace onematch;

namespace {

Graph cycle(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back(canon(i, (i + 1) % n));
  return Graph::build(n, e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  EdgeList e;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph::build(n, e);
}

}  // namespace

TEST_CASE("shortest augmenting path on a path graph") {
  auto g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  Matching empty = Matching::from_edges(4, {});
  auto p = find_bounded_augmenting_path(g, empty, 9);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<int>{0, 1});  // frozen: lowest start, length 1

  auto m = Matching::from_edges(4, {{1, 2}});
  auto p3 = find_bounded_augmenting_path(g, m, 9);
  REQUIRE(p3);
  CHECK(p3->vertices == std::vector<int>{0, 1, 2, 3});  // frozen
  CHECK(p3->matched == std::vector<bool>{false, true, false});
  CHECK(!find_bounded_augmenting_path(g, m, 1));
  CHECK(!find_bounded_augmenting_path(g, m, 2));  // even k lowered to 1
}

TEST_CASE("augment applies the symmetric difference") {
  auto g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  auto m = Matching::from_edges(4, {{1, 2}});
  auto p = find_bounded_augmenting_path(g, m, 3);
  REQUIRE(p);
  auto m2 = augment(m, *p);
  CHECK(m2.edges() == EdgeList{{0, 1}, {2, 3}});
  CHECK(validate_matching(g, m2).ok());
}

TEST_CASE("augment rejects non-augmenting paths") {
  auto g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  auto m = Matching::from_edges(4, {{1, 2}});
  CHECK_THROWS_AS(augment(m, AlternatingPath{{1, 2}, {true}}), std::invalid_argument);
  CHECK_THROWS_AS(augment(m, AlternatingPath{{0, 1}, {false}}), std::invalid_argument);
  CHECK_THROWS_AS(augment(m, AlternatingPath{{0, 1, 2}, {false, true}}),
                  std::invalid_argument);
  // flags contradicting M
  CHECK_THROWS_AS(augment(m, AlternatingPath{{0, 1, 2, 3}, {false, false, false}}),
                  std::invalid_argument);
}

TEST_CASE("elimination reaches optimum on small graphs") {
  // frozen oracle values: C6 -> 3, K4 -> 2
  auto c6 = cycle(6);
  auto m = eliminate_bounded_augmenting_paths(c6, Matching::from_edges(6, {}), 6);
  CHECK(m.size() == 3);
  CHECK(oracle::max_matching_size(c6) == 3);

  auto k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(eliminate_bounded_augmenting_paths(k4, Matching::from_edges(4, {}), 9).size() == 2);
  CHECK(oracle::max_matching_size(k4) == 2);
  CHECK(brute_force_maximum_matching(k4).size() == 2);
}

TEST_CASE("k = n elimination is maximum (Berge), random graphs") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 9);
    auto g = random_graph(n, 0.4, rng);
    auto m = eliminate_bounded_augmenting_paths(g, Matching::from_edges(n, {}), n);
    CHECK(validate_matching(g, m).ok());
    CHECK(m.size() == oracle::max_matching_size(g));
    CHECK(m.size() == brute_force_maximum_matching(g).size());
    CHECK(!oracle::has_augmenting_path(g, m, n));
  }
}

TEST_CASE("bounded elimination leaves no short path but may be suboptimal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    auto g = random_graph(n, 0.3, rng);
    for (int k : {1, 3, 5, 9}) {
      auto m = eliminate_bounded_augmenting_paths(g, Matching::from_edges(n, {}), k);
      CHECK(validate_matching(g, m).ok());
      CHECK(!oracle::has_augmenting_path(g, m, k));
      auto found = find_bounded_augmenting_path(g, m, k);
      CHECK(!found);
    }
  }
}

TEST_CASE("search result agrees with the exhaustive oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 8);
    auto g = random_graph(n, 0.35, rng);
    // random (valid) matching: greedy over shuffled edges
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<char> used(n, 0);
    EdgeList chosen;
    for (auto [u, v] : edges)
      if (!used[u] && !used[v] && rng() % 2) {
        used[u] = used[v] = 1;
        chosen.push_back({u, v});
      }
    auto m = Matching::from_edges(n, chosen);
    for (int k : {1, 3, 5, 7, 9}) {
      bool lib = find_bounded_augmenting_path(g, m, k).has_value();
      CHECK(lib == oracle::has_augmenting_path(g, m, k));
    }
  }
}

TEST_CASE("engine rejects invalid matchings") {
  auto g = Graph::build(3, {{0, 1}, {1, 2}});
  auto bad = Matching::from_edges(3, {{0, 2}});
  CHECK_THROWS_AS(find_bounded_augmenting_path(g, bad, 3), std::invalid_argument);
  CHECK_THROWS_AS(eliminate_bounded_augmenting_paths(g, bad, 3), std::invalid_argument);
}

TEST_CASE("brute force cap") {
  auto big = Graph::build(17, {});
  CHECK_THROWS_AS(brute_force_maximum_matching(big), std::invalid_argument);
}
