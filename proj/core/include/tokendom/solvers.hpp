#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "tokendom/grid.hpp"
#include "tokendom/token_graph.hpp"
#include "tokendom/vertex_set.hpp"

namespace tokendom {

enum class SolveStatus { Optimal, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  int value = 0;  // optimum when Optimal; best feasible size on Timeout
  int lower = 0;  // proved bracket; lower == upper == value when Optimal
  int upper = 0;
  VertexSet witness;  // feasible set of size `value`
  std::uint64_t nodes = 0;
};

bool is_dominating(const FiniteGraph& g, const VertexSet& s);

// deterministic max-coverage greedy (lowest index wins ties); always feasible
VertexSet greedy_dominating_set(const FiniteGraph& g);

// greedy set of vertices with pairwise disjoint closed neighborhoods; its
// size never exceeds the domination number
int packing_style_lower_bound(const FiniteGraph& g);

// branch-and-bound minimum dominating set. Branches on an undominated vertex
// with the fewest possible dominators; prunes with a disjoint-neighborhood
// bound. An optional seed (already dominating) tightens the incumbent.
SolveResult exact_domination_number(const FiniteGraph& g,
                                    std::chrono::milliseconds budget,
                                    const VertexSet* seed = nullptr);

// branch-and-bound maximum 2-packing (independent set of the conflict graph
// whose edges join vertices with intersecting closed neighborhoods), pruned
// with a greedy clique-cover bound
SolveResult exact_packing_number(const FiniteGraph& g,
                                 std::chrono::milliseconds budget);

// true iff every triangle point dominated by `base` stays dominated after
// swapping `remove` out and `add` in. Requires remove ⊆ base, add disjoint
// from base, and all points inside the triangle.
bool check_swap_condition(int n, const std::vector<GridPoint>& base,
                          const std::vector<GridPoint>& remove,
                          const std::vector<GridPoint>& add);

}  // namespace tokendom
