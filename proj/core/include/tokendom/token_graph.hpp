#pragma once

#include <cstddef>
#include <vector>

#include "tokendom/grid.hpp"
#include "tokendom/vertex_set.hpp"

namespace tokendom {

// A 2-subset {a,b} of the path's vertex labels, kept normalized as a < b.
// Labels are 1-based.
struct TokenPair {
  int a = 0;
  int b = 0;

  friend bool operator==(const TokenPair&, const TokenPair&) = default;
};

constexpr bool lex_less(TokenPair x, TokenPair y) {
  return x.a != y.a ? x.a < y.a : x.b < y.b;
}

// Simple undirected graph over indices 0..order-1. Adjacency lists are kept
// sorted ascending; vertices never carry labels here, the builders below
// define closed-form index <-> label maps instead.
class FiniteGraph {
 public:
  explicit FiniteGraph(int order);

  int order() const { return order_; }
  std::size_t edge_count() const { return edges_; }

  void add_edge(int u, int v);  // rejects loops and duplicates
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors_of(int v) const { return adj_[v]; }

  // One bit-packed N[v] per vertex; O(order^2) bits, intended for the solvers
  // on small instances.
  std::vector<VertexSet> closed_neighborhood_masks() const;

 private:
  int order_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

// The path on n >= 2 vertices; index k carries label k+1.
FiniteGraph path_graph(int n);

// The 2-token graph of g: one vertex per 2-subset of V(g), two subsets
// adjacent iff their symmetric difference is an edge of g. Subsets {u,v}
// (u < v, 0-based indices of g) are indexed in colex order:
// index = v(v-1)/2 + u.
FiniteGraph double_vertex_graph(const FiniteGraph& g);

// double_vertex_graph(path_graph(n)); its index space coincides with the
// row-major order of inner_triangle(n) under the grid <-> token maps below.
FiniteGraph token_graph_of_path(int n);

// The induced grid graph of a region with row-major indexing.
FiniteGraph region_graph(const Region& region);

// The isomorphism between the inner triangle and the token pairs:
// (i,j) <-> {i, j+1}. grid_to_token requires 1 <= i <= j.
TokenPair grid_to_token(GridPoint p);
GridPoint token_to_grid(TokenPair t);

// Colex rank of a pair within any token graph of order >= b, and its inverse.
int token_index(TokenPair t);
TokenPair token_pair_at(int index);

// Full structural comparison of inner_triangle(n) against the token graph of
// the n-path under the shared indexing: bijection plus identical edge sets.
bool check_isomorphism(int n);

}  // namespace tokendom
