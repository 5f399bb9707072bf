#include "catch_amalgamated.hpp"

#include "bperf/io.hpp"
#include "bperf/iso.hpp"
#include "bperf/oracles.hpp"
#include "helpers.hpp"

using namespace bperf;

TEST_CASE("family is the fixed list of 22 patterns") {
  const auto& fam = family();
  REQUIRE(fam.size() == 22);
  for (int i = 0; i < 22; ++i) {
    CHECK(fam[i].index == i + 1);
    CHECK(fam[i].name == "F" + std::to_string(i + 1));
    CHECK(fam[i].graph.n() >= 5);
    CHECK(fam[i].graph.n() <= 10);
  }
}

TEST_CASE("family anchors") {
  const auto& fam = family();
  CHECK(are_isomorphic(fam[0].graph, path_graph(5)));
  CHECK(fam[0].alias == "P5");
  CHECK(are_isomorphic(fam[9].graph, complement(path_graph(6))));
  CHECK(fam[9].alias == "complement of P6");

  Graph p3_p4(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(are_isomorphic(fam[1].graph, p3_p4));
  Graph three_p3(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}});
  CHECK(are_isomorphic(fam[2].graph, three_p3));

  CHECK(encode_graph6(fam[0].graph) == "DhC");
  CHECK(encode_graph6(fam[9].graph) == "Ey]W");
  CHECK(encode_graph6(fam[21].graph) == "Gqlj_[");
}

TEST_CASE("family members are pairwise non-isomorphic") {
  const auto& fam = family();
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j)
      if (fam[i].graph.n() == fam[j].graph.n())
        REQUIRE_FALSE(are_isomorphic(fam[i].graph, fam[j].graph));
}

TEST_CASE("every member passes the minimality gate") {
  for (const auto& p : family()) {
    INFO(p.name);
    CHECK(is_minimally_b_imperfect(p.graph));
  }
}

TEST_CASE("small boats") {
  const auto& boats = small_boats();
  REQUIRE(boats.size() == 2);
  CHECK(boats[0].n() == 6);
  CHECK(boats[0].edge_count() == 8);
  CHECK(boats[1].n() == 6);
  CHECK(boats[1].edge_count() == 9);
  CHECK(are_isomorphic(boats[1], complement(cycle_graph(6))));
  CHECK(find_induced(boats[1], boats[0]).has_value() == false);
  for (const Graph& b : boats) CHECK(is_b_perfect(b));
}

TEST_CASE("find_induced basics") {
  Graph host = cycle_graph(6);
  auto emb = find_induced(host, path_graph(4));
  REQUIRE(emb);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(path_graph(4).adjacent(i, j) == host.adjacent(emb->image[i], emb->image[j]));

  CHECK_FALSE(find_induced(cycle_graph(5), path_graph(5)));
  CHECK_FALSE(find_induced(complete_graph(6), cycle_graph(4)));
  CHECK(find_induced(path_graph(3), Graph(0, {})));
  CHECK_FALSE(find_induced(path_graph(3), path_graph(4)));

  auto self = find_induced(path_graph(5), path_graph(5));
  REQUIRE(self);
}

TEST_CASE("find_induced is deterministic") {
  Graph host(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
  auto a = find_induced(host, path_graph(5));
  auto b = find_induced(host, path_graph(5));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->image == b->image);
}

TEST_CASE("find_forbidden reports the lowest index") {
  auto hit = find_forbidden(path_graph(5));
  REQUIRE(hit);
  CHECK(hit->index == 1);
  CHECK(hit->name == "F1");
  CHECK(hit->embedding.image.size() == 5);

  Graph p5_plus_p3(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}});
  auto first = find_forbidden(p5_plus_p3);
  REQUIRE(first);
  CHECK(first->index == 1);
}

TEST_CASE("each member detects itself and nothing smaller") {
  for (const auto& p : family()) {
    INFO(p.name);
    auto hit = find_forbidden(p.graph);
    REQUIRE(hit);
    CHECK(hit->index == p.index);
  }
}

TEST_CASE("b-perfect examples") {
  CHECK(is_b_perfect(complete_graph(5)));
  CHECK(is_b_perfect(cycle_graph(5)));
  CHECK(is_b_perfect(cycle_graph(4)));
  CHECK(is_b_perfect(path_graph(4)));
  CHECK(is_b_perfect(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
  CHECK_FALSE(is_b_perfect(path_graph(6)));
  CHECK_FALSE(is_b_perfect(path_graph(5)));
  CHECK(is_b_perfect(Graph(0, {})));
}
