#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <tokendom/grid.hpp>
#include <tokendom/token_graph.hpp>

using namespace tokendom;

namespace {

// oracle: edge count of the 2-token graph by direct enumeration of 2-subsets
std::size_t token_edges_brute(int n) {
  std::vector<std::pair<int, int>> subs;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a) subs.push_back({a, b});
  std::size_t edges = 0;
  for (std::size_t x = 0; x < subs.size(); ++x)
    for (std::size_t y = x + 1; y < subs.size(); ++y) {
      std::set<int> diff;
      for (int v : {subs[x].first, subs[x].second, subs[y].first,
                    subs[y].second}) {
        if (diff.count(v))
          diff.erase(v);
        else
          diff.insert(v);
      }
      if (diff.size() != 2) continue;
      auto it = diff.begin();
      const int u = *it++;
      const int w = *it;
      if (w - u == 1) ++edges;  // path edge
    }
  return edges;
}

}  // namespace

TEST_SUITE("token_graph") {

TEST_CASE("finite graph basics") {
  FiniteGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.neighbors_of(1) == std::vector<int>{0, 2});

  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("closed neighborhood masks") {
  FiniteGraph g(3);
  g.add_edge(0, 1);
  const auto masks = g.closed_neighborhood_masks();
  REQUIRE(masks.size() == 3);
  CHECK(masks[0].count() == 2);
  CHECK(masks[0].test(0));
  CHECK(masks[0].test(1));
  CHECK(masks[2].count() == 1);
  CHECK(masks[2].test(2));
}

TEST_CASE("path graph") {
  const FiniteGraph p = path_graph(5);
  CHECK(p.order() == 5);
  CHECK(p.edge_count() == 4);
  CHECK(p.adjacent(0, 1));
  CHECK(p.adjacent(3, 4));
  CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("token graph order and size against brute force") {
  for (int n : {2, 3, 4, 5, 6, 10}) {
    const FiniteGraph t = token_graph_of_path(n);
    CHECK(t.order() == n * (n - 1) / 2);
    CHECK(t.edge_count() == token_edges_brute(n));
  }
  CHECK(token_graph_of_path(2).order() == 1);
  CHECK(token_graph_of_path(2).edge_count() == 0);
  CHECK(token_graph_of_path(4).order() == 6);
  CHECK(token_graph_of_path(4).edge_count() == 6);
  CHECK(token_graph_of_path(10).order() == 45);
  CHECK(token_graph_of_path(10).edge_count() == 72);
}

TEST_CASE("token edge count closed form") {
  // (n-1)(n-2) edges: each of the n-1 path edges moves one of the n-2
  // placements of the second token
  for (int n = 2; n <= 12; ++n)
    CHECK(token_graph_of_path(n).edge_count() ==
          static_cast<std::size_t>((n - 1) * (n - 2)));
}

TEST_CASE("double vertex graph of a star") {
  FiniteGraph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  const FiniteGraph t = double_vertex_graph(star);
  CHECK(t.order() == 6);
  // {0,x} ~ {x,y} for each leaf pair by moving the hub token, so 2 per pair
  CHECK(t.edge_count() == 6);
}

TEST_CASE("colex token rank round trip") {
  int expect = 0;
  for (int b = 2; b <= 40; ++b)
    for (int a = 1; a < b; ++a) {
      const TokenPair t{a, b};
      CHECK(token_index(t) == expect);
      CHECK(token_pair_at(expect) == t);
      ++expect;
    }
}

TEST_CASE("grid and token coordinates map to each other") {
  CHECK(grid_to_token({1, 1}) == TokenPair{1, 2});
  CHECK(grid_to_token({3, 7}) == TokenPair{3, 8});
  CHECK(token_to_grid({3, 8}) == GridPoint{3, 7});
  for (int n : {4, 9}) {
    const Region tri = Region::inner_triangle(n);
    for (GridPoint p : tri.vertices()) {
      const TokenPair t = grid_to_token(p);
      CHECK(token_to_grid(t) == p);
      CHECK(tri.index_of(p) == static_cast<std::size_t>(token_index(t)));
    }
  }
  CHECK_THROWS_AS(grid_to_token({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(grid_to_token({3, 2}), std::invalid_argument);
}

TEST_CASE("region graph of the triangle equals the token graph") {
  for (int n : {3, 4, 7}) {
    const FiniteGraph a = region_graph(Region::inner_triangle(n));
    const FiniteGraph b = token_graph_of_path(n);
    REQUIRE(a.order() == b.order());
    REQUIRE(a.edge_count() == b.edge_count());
    for (int v = 0; v < a.order(); ++v)
      CHECK(a.neighbors_of(v) == b.neighbors_of(v));
  }
}

TEST_CASE("isomorphism check over a small range") {
  for (int n = 2; n <= 12; ++n) CHECK(check_isomorphism(n));
}

}  // TEST_SUITE
