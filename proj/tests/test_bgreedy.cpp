#include "catch_amalgamated.hpp"

#include "bperf/bgreedy.hpp"
#include "bperf/family.hpp"
#include "bperf/io.hpp"
#include "helpers.hpp"

using namespace bperf;

namespace {

Coloring replay(const Graph& g, const EliminationTrace& trace) {
  std::vector<int> colors = trace.initial.assignment;
  for (const auto& round : trace.rounds) {
    for (int& c : colors)
      if (c > round.eliminated_color) --c;
    for (auto [v, to] : round.recolored) colors[v] = to;
    REQUIRE(is_proper(g, Coloring(colors)));
  }
  return Coloring(colors);
}

}  // namespace

TEST_CASE("greedy initial coloring") {
  Graph p5 = path_graph(5);
  CHECK(initial_coloring(p5, {0, 1, 2, 3, 4}).assignment == std::vector<int>{1, 2, 1, 2, 1});
  CHECK(initial_coloring(p5, {4, 3, 2, 1, 0}).assignment == std::vector<int>{1, 2, 1, 2, 1});
  CHECK_THROWS_AS(initial_coloring(p5, {0, 1, 2, 3}), bad_order);
  CHECK_THROWS_AS(initial_coloring(p5, {0, 1, 2, 3, 3}), bad_order);
  CHECK_THROWS_AS(initial_coloring(p5, {0, 1, 2, 3, 5}), bad_order);
}

TEST_CASE("eliminating a color class without b-vertex") {
  Graph p5 = path_graph(5);
  Coloring start({1, 2, 3, 2, 1});
  auto [result, round] = eliminate_color(p5, start, 3);
  CHECK(result.assignment == std::vector<int>{1, 2, 1, 2, 1});
  CHECK(result.k == 2);
  CHECK(round.eliminated_color == 3);
  REQUIRE(round.recolored.size() == 1);
  CHECK(round.recolored[0] == std::pair<int, int>{2, 1});

  CHECK_THROWS_AS(eliminate_color(p5, Coloring({1, 2, 1, 2, 1}), 1), has_b_vertex);
  CHECK_THROWS_AS(eliminate_color(p5, start, 4), std::invalid_argument);
}

TEST_CASE("elimination renumbers colors above the dead class") {
  Graph p6 = path_graph(6);
  Coloring start({1, 2, 1, 3, 1, 2});
  // color 2 = {1, 5}; neither vertex has a neighbor colored 3, so the class
  // has no b-vertex. Both vertices move to 3, which then renumbers to 2.
  auto [result, round] = eliminate_color(p6, start, 2);
  CHECK(result.k == 2);
  CHECK(result.assignment == std::vector<int>{1, 2, 1, 2, 1, 2});
  CHECK(round.eliminated_color == 2);
  CHECK(round.recolored == std::vector<std::pair<int, int>>{{1, 2}, {5, 2}});
}

TEST_CASE("b-greedy on a path reaches the chromatic number") {
  Graph p5 = path_graph(5);
  for (auto order : {std::vector<int>{0, 1, 2, 3, 4}, {2, 0, 4, 1, 3}, {4, 2, 0, 3, 1}}) {
    BGreedyResult r = b_greedy(p5, order);
    CHECK(r.coloring.k == 2);
    CHECK(is_b_coloring(p5, r.coloring));
    CHECK(replay(p5, r.trace).assignment == r.coloring.assignment);
  }
}

TEST_CASE("b-greedy dissolves a wasted color") {
  // Greedy along 0, 3, 1, 2 colors P4 as (1, 2, 3, 1). Class 1 has no
  // b-vertex, so it dissolves and two colors remain.
  Graph p4 = path_graph(4);
  BGreedyResult r = b_greedy(p4, {0, 3, 1, 2});
  CHECK(r.trace.initial.assignment == std::vector<int>{1, 2, 3, 1});
  REQUIRE(r.trace.rounds.size() == 1);
  CHECK(r.trace.rounds[0].eliminated_color == 1);
  CHECK(r.coloring.k == 2);
  CHECK(r.coloring.assignment == std::vector<int>{2, 1, 2, 1});
}

TEST_CASE("default order is degree descending") {
  Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(default_order(star)[0] == 0);
  BGreedyResult r = b_greedy(star);
  CHECK(r.coloring.k == 2);
  CHECK(r.trace.rounds.empty());
}

TEST_CASE("b-greedy output is always a b-coloring") {
  auto gen = testing::rng(4242);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(gen() % 8);
    Graph g = testing::random_graph(n, 0.4, gen);
    BGreedyResult r = b_greedy(g, testing::random_permutation(n, gen));
    INFO(encode_graph6(g));
    CHECK(is_b_coloring(g, r.coloring));
    CHECK(replay(g, r.trace).assignment == r.coloring.assignment);
  }
}

TEST_CASE("b-greedy is optimal on family-free graphs") {
  auto gen = testing::rng(515);
  int tested = 0;
  while (tested < 25) {
    int n = 4 + static_cast<int>(gen() % 4);
    Graph g = testing::random_graph(n, 0.45, gen);
    if (!is_b_perfect(g)) continue;
    ++tested;
    int chi = chromatic_number(g);
    for (int rep = 0; rep < 5; ++rep) {
      BGreedyResult r = b_greedy(g, testing::random_permutation(n, gen));
      INFO(encode_graph6(g));
      CHECK(r.coloring.k == chi);
    }
  }
}
