#include "tokendom/token_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tokendom {

FiniteGraph::FiniteGraph(int order) : order_(order), adj_(order) {
  if (order < 0) throw std::invalid_argument("FiniteGraph: negative order");
}

void FiniteGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loop rejected");
  if (adjacent(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

bool FiniteGraph::adjacent(int u, int v) const {
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), target);
}

std::vector<VertexSet> FiniteGraph::closed_neighborhood_masks() const {
  std::vector<VertexSet> masks(order_, VertexSet(order_));
  for (int v = 0; v < order_; ++v) {
    masks[v].set(v);
    for (int u : adj_[v]) masks[v].set(u);
  }
  return masks;
}

FiniteGraph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: n must be >= 2");
  FiniteGraph g(n);
  for (int k = 0; k + 1 < n; ++k) g.add_edge(k, k + 1);
  return g;
}

namespace {

// colex rank of {u,v}, u < v, both 0-based
inline int pair_rank(int u, int v) { return v * (v - 1) / 2 + u; }

}  // namespace

FiniteGraph double_vertex_graph(const FiniteGraph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("double_vertex_graph: order must be >= 2");
  FiniteGraph f(n * (n - 1) / 2);
  // moving one token along an edge of g gives all adjacencies; enumerate each
  // edge once from the lower-ranked endpoint pair
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      int self = pair_rank(u, v);
      for (int w : g.neighbors_of(u)) {
        if (w == v) continue;
        int other = pair_rank(std::min(w, v), std::max(w, v));
        if (other > self) f.add_edge(self, other);
      }
      for (int w : g.neighbors_of(v)) {
        if (w == u) continue;
        int other = pair_rank(std::min(w, u), std::max(w, u));
        if (other > self) f.add_edge(self, other);
      }
    }
  }
  return f;
}

FiniteGraph token_graph_of_path(int n) { return double_vertex_graph(path_graph(n)); }

FiniteGraph region_graph(const Region& region) {
  const auto points = region.vertices();
  FiniteGraph g(static_cast<int>(points.size()));
  for (std::size_t k = 0; k < points.size(); ++k) {
    GridPoint p = points[k];
    // right and upper neighbor enumerate each edge once
    for (GridPoint q : {GridPoint{p.i + 1, p.j}, GridPoint{p.i, p.j + 1}})
      if (region.contains(q))
        g.add_edge(static_cast<int>(k), static_cast<int>(region.index_of(q)));
  }
  return g;
}

TokenPair grid_to_token(GridPoint p) {
  if (p.i < 1 || p.i > p.j)
    throw std::invalid_argument("grid_to_token: (" + std::to_string(p.i) + "," +
                                std::to_string(p.j) +
                                ") is not an inner triangle point");
  return {p.i, p.j + 1};
}

GridPoint token_to_grid(TokenPair t) {
  if (t.a < 1 || t.a >= t.b)
    throw std::invalid_argument("token_to_grid: pair must satisfy 1 <= a < b");
  return {t.a, t.b - 1};
}

int token_index(TokenPair t) {
  if (t.a < 1 || t.a >= t.b)
    throw std::invalid_argument("token_index: pair must satisfy 1 <= a < b");
  return pair_rank(t.a - 1, t.b - 1);
}

TokenPair token_pair_at(int index) {
  if (index < 0) throw std::invalid_argument("token_pair_at: negative index");
  // invert v(v-1)/2 <= index
  int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * index)) / 2.0);
  while (v * (v - 1) / 2 > index) --v;
  while ((v + 1) * v / 2 <= index) ++v;
  int u = index - v * (v - 1) / 2;
  return {u + 1, v + 1};
}

bool check_isomorphism(int n) {
  if (n < 2) throw std::invalid_argument("check_isomorphism: n must be >= 2");
  const Region triangle = Region::inner_triangle(n);
  const FiniteGraph grid = region_graph(triangle);
  const FiniteGraph tokens = token_graph_of_path(n);
  if (grid.order() != tokens.order() || grid.edge_count() != tokens.edge_count())
    return false;
  const auto points = triangle.vertices();
  // bijection respecting the shared index space
  for (std::size_t k = 0; k < points.size(); ++k) {
    TokenPair t = grid_to_token(points[k]);
    if (t.b > n) return false;
    if (token_index(t) != static_cast<int>(k)) return false;
  }
  // identical sorted adjacency in both directions
  for (int v = 0; v < grid.order(); ++v)
    if (grid.neighbors_of(v) != tokens.neighbors_of(v)) return false;
  return true;
}

}  // namespace tokendom
