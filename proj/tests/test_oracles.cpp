#include "catch_amalgamated.hpp"

#include "bperf/io.hpp"
#include "bperf/oracles.hpp"
#include "helpers.hpp"

using namespace bperf;

TEST_CASE("coloring container validates") {
  Coloring c({1, 2, 1, 2, 1});
  CHECK(c.n == 5);
  CHECK(c.k == 2);
  CHECK_THROWS_AS(Coloring({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring({1, 3}), std::invalid_argument);  // color 2 unused
}

TEST_CASE("properness") {
  Graph p5 = path_graph(5);
  CHECK(is_proper(p5, Coloring({1, 2, 1, 2, 1})));
  CHECK_FALSE(is_proper(p5, Coloring({1, 1, 2, 1, 2})));
  CHECK_THROWS_AS(is_proper(p5, Coloring({1, 2})), size_mismatch);
}

TEST_CASE("b-vertices of a path coloring") {
  Graph p5 = path_graph(5);
  auto bv = b_vertices(p5, Coloring({1, 2, 1, 2, 1}));
  REQUIRE(bv.size() == 2);
  CHECK(bv[1] == VertexSet{0, 2, 4});
  CHECK(bv[2] == VertexSet{1, 3});
  CHECK(is_b_coloring(p5, Coloring({1, 2, 1, 2, 1})));

  auto none = b_vertices(p5, Coloring({1, 2, 3, 2, 1}));
  CHECK(none[3].empty());
  CHECK_FALSE(is_b_coloring(p5, Coloring({1, 2, 3, 2, 1})));
}

TEST_CASE("b-coloring on a five-cycle") {
  Graph c5 = cycle_graph(5);
  CHECK(is_b_coloring(c5, Coloring({1, 2, 1, 2, 3})));
  CHECK_FALSE(is_b_coloring(c5, Coloring({1, 1, 2, 1, 2})));  // improper
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(path_graph(5)) == 2);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(complement(cycle_graph(6))) == 3);
  CHECK(chromatic_number(Graph(3, {})) == 1);
  CHECK(chromatic_number(Graph(0, {})) == 0);
  CHECK_THROWS_AS(chromatic_number(Graph(17, {})), too_large);

  Coloring c = optimal_coloring(cycle_graph(5));
  CHECK(c.k == 3);
  CHECK(is_proper(cycle_graph(5), c));
}

TEST_CASE("clique number") {
  CHECK(clique_number(path_graph(5)) == 2);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(complement(cycle_graph(6))) == 3);
  CHECK(clique_number(Graph(4, {})) == 1);
  CHECK(clique_number(Graph(0, {})) == 0);
  CHECK_THROWS_AS(clique_number(Graph(21, {})), too_large);

  Graph g = complement(cycle_graph(6));
  VertexSet w = max_clique(g);
  CHECK(w.size() == 3);
  CHECK(is_clique(g, w));
}

TEST_CASE("m-degree") {
  CHECK(m_degree(path_graph(5)) == 3);
  CHECK(m_degree(complete_graph(4)) == 4);
  CHECK(m_degree(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == 2);
  CHECK(m_degree(Graph(1, {})) == 1);
}

TEST_CASE("b-chromatic number on known graphs") {
  auto p5 = b_chromatic_number(path_graph(5));
  CHECK(p5.value == 3);
  CHECK(p5.witness.k == 3);
  CHECK(is_b_coloring(path_graph(5), p5.witness));

  CHECK(b_chromatic_number(cycle_graph(5)).value == 3);
  CHECK(b_chromatic_number(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).value == 2);
  CHECK(b_chromatic_number(complete_graph(4)).value == 4);
  CHECK(b_chromatic_number(path_graph(4)).value == 2);
  CHECK(b_chromatic_number(Graph(1, {})).value == 1);
  CHECK_THROWS_AS(b_chromatic_number(Graph(13, {})), too_large);
}

TEST_CASE("b-chromatic bounds on random graphs") {
  auto gen = testing::rng(99);
  for (int t = 0; t < 50; ++t) {
    Graph g = testing::random_graph(2 + static_cast<int>(gen() % 6), 0.5, gen);
    auto res = b_chromatic_number(g);
    int chi = chromatic_number(g);
    INFO(encode_graph6(g));
    CHECK(res.value >= chi);
    CHECK(res.value <= m_degree(g));
    CHECK(is_b_coloring(g, res.witness));
    CHECK(res.witness.k == res.value);
    CHECK(chi >= clique_number(g));
  }
}

TEST_CASE("b-perfection oracle") {
  CHECK(is_b_perfect_oracle(cycle_graph(5)));
  CHECK(is_b_perfect_oracle(complete_graph(5)));
  CHECK(is_b_perfect_oracle(cycle_graph(4)));
  CHECK_FALSE(is_b_perfect_oracle(path_graph(5)));
  CHECK_FALSE(is_b_perfect_oracle(path_graph(6)));
  CHECK(is_b_perfect_oracle(Graph(0, {})));
  CHECK_THROWS_AS(is_b_perfect_oracle(Graph(10, {})), too_large);
}

TEST_CASE("minimal b-imperfection oracle") {
  CHECK(is_minimally_b_imperfect(path_graph(5)));
  CHECK_FALSE(is_minimally_b_imperfect(path_graph(6)));  // contains P5 properly
  CHECK_FALSE(is_minimally_b_imperfect(cycle_graph(5)));  // b-perfect
  CHECK_THROWS_AS(is_minimally_b_imperfect(Graph(11, {})), too_large);
}
