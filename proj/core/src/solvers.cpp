#include "tokendom/solvers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tokendom {

namespace {

using Clock = std::chrono::steady_clock;

int disjoint_neighborhood_bound(const std::vector<VertexSet>& nbhd,
                                const VertexSet& pending) {
  if (nbhd.empty()) return 0;
  VertexSet blocked(nbhd[0].universe_size());
  int count = 0;
  pending.for_each([&](int v) {
    if (!nbhd[v].intersects(blocked)) {
      ++count;
      blocked |= nbhd[v];
    }
  });
  return count;
}

struct DominationSearch {
  const std::vector<VertexSet>& nbhd;
  int order;
  Clock::time_point deadline;

  VertexSet best;
  int best_size;
  std::uint64_t nodes = 0;
  bool timed_out = false;

  VertexSet chosen;

  DominationSearch(const std::vector<VertexSet>& masks, int n,
                   Clock::time_point stop, VertexSet incumbent)
      : nbhd(masks),
        order(n),
        deadline(stop),
        best(std::move(incumbent)),
        best_size(static_cast<int>(best.count())),
        chosen(n) {}

  void run(VertexSet& dominated, int count) {
    if ((++nodes & 1023u) == 0 && Clock::now() >= deadline) timed_out = true;
    if (timed_out) return;
    if (dominated.is_full()) {
      if (count < best_size) {
        best_size = count;
        best = chosen;
      }
      return;
    }
    VertexSet pending = VertexSet::full(order);
    pending.subtract(dominated);
    if (count + disjoint_neighborhood_bound(nbhd, pending) >= best_size) return;

    // vertex with the fewest possible dominators, lowest index on ties
    int branch = -1;
    std::size_t branch_deg = std::numeric_limits<std::size_t>::max();
    pending.for_each([&](int v) {
      if (nbhd[v].count() < branch_deg) {
        branch_deg = nbhd[v].count();
        branch = v;
      }
    });

    // dominators ordered by how much new ground they cover
    std::vector<std::pair<int, int>> candidates;
    nbhd[branch].for_each([&](int u) {
      VertexSet gain = nbhd[u];
      gain.subtract(dominated);
      candidates.emplace_back(-static_cast<int>(gain.count()), u);
    });
    std::sort(candidates.begin(), candidates.end());

    for (auto [neg_gain, u] : candidates) {
      (void)neg_gain;
      VertexSet saved = dominated;
      chosen.set(u);
      dominated |= nbhd[u];
      run(dominated, count + 1);
      dominated = saved;
      chosen.reset(u);
      if (timed_out) return;
    }
  }
};

struct PackingSearch {
  const std::vector<VertexSet>& conflict;  // closed conflict neighborhoods
  int order;
  Clock::time_point deadline;

  VertexSet best;
  int best_size;
  std::uint64_t nodes = 0;
  bool timed_out = false;

  VertexSet chosen;

  PackingSearch(const std::vector<VertexSet>& conf, int n,
                Clock::time_point stop, VertexSet incumbent)
      : conflict(conf),
        order(n),
        deadline(stop),
        best(std::move(incumbent)),
        best_size(static_cast<int>(best.count())),
        chosen(n) {}

  int clique_cover_bound(const VertexSet& avail) const {
    VertexSet rest = avail;
    int cliques = 0;
    while (!rest.empty()) {
      int v = rest.first_set();
      VertexSet common = rest;
      common &= conflict[v];
      common.reset(v);
      rest.reset(v);
      while (!common.empty()) {
        int u = common.first_set();
        rest.reset(u);
        common.reset(u);
        common &= conflict[u];
      }
      ++cliques;
    }
    return cliques;
  }

  void run(VertexSet avail, int count) {
    if ((++nodes & 1023u) == 0 && Clock::now() >= deadline) timed_out = true;
    if (timed_out) return;
    if (avail.empty()) {
      if (count > best_size) {
        best_size = count;
        best = chosen;
      }
      return;
    }
    if (count + clique_cover_bound(avail) <= best_size) return;

    // most conflicted available vertex, lowest index on ties
    int branch = -1;
    std::size_t branch_deg = 0;
    bool first = true;
    avail.for_each([&](int v) {
      VertexSet local = conflict[v];
      local &= avail;
      std::size_t deg = local.count();
      if (first || deg > branch_deg) {
        first = false;
        branch_deg = deg;
        branch = v;
      }
    });

    VertexSet included = avail;
    included.subtract(conflict[branch]);
    chosen.set(branch);
    run(std::move(included), count + 1);
    chosen.reset(branch);
    if (timed_out) return;

    avail.reset(branch);
    run(std::move(avail), count);
  }
};

std::vector<VertexSet> conflict_masks(const std::vector<VertexSet>& nbhd,
                                      int order) {
  std::vector<VertexSet> conf(order, VertexSet(order));
  for (int v = 0; v < order; ++v) {
    conf[v].set(v);
    for (int u = v + 1; u < order; ++u)
      if (nbhd[v].intersects(nbhd[u])) {
        conf[v].set(u);
        conf[u].set(v);
      }
  }
  return conf;
}

VertexSet greedy_packing(const std::vector<VertexSet>& conf, int order) {
  VertexSet chosen(order), blocked(order);
  for (int v = 0; v < order; ++v)
    if (!blocked.test(v)) {
      chosen.set(v);
      blocked |= conf[v];
    }
  return chosen;
}

}  // namespace

bool is_dominating(const FiniteGraph& g, const VertexSet& s) {
  if (s.universe_size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("is_dominating: set size does not match graph");
  VertexSet dominated(g.order());
  s.for_each([&](int v) {
    dominated.set(v);
    for (int u : g.neighbors_of(v)) dominated.set(u);
  });
  return dominated.is_full();
}

VertexSet greedy_dominating_set(const FiniteGraph& g) {
  const auto nbhd = g.closed_neighborhood_masks();
  const int order = g.order();
  VertexSet chosen(order), dominated(order);
  while (!dominated.is_full()) {
    int pick = -1, pick_gain = 0;
    for (int v = 0; v < order; ++v) {
      if (chosen.test(v)) continue;
      VertexSet gain = nbhd[v];
      gain.subtract(dominated);
      int cnt = static_cast<int>(gain.count());
      if (cnt > pick_gain) {
        pick_gain = cnt;
        pick = v;
      }
    }
    chosen.set(pick);
    dominated |= nbhd[pick];
  }
  return chosen;
}

int packing_style_lower_bound(const FiniteGraph& g) {
  return disjoint_neighborhood_bound(g.closed_neighborhood_masks(),
                                     VertexSet::full(g.order()));
}

SolveResult exact_domination_number(const FiniteGraph& g,
                                    std::chrono::milliseconds budget,
                                    const VertexSet* seed) {
  const auto nbhd = g.closed_neighborhood_masks();
  const int order = g.order();
  SolveResult res;
  if (order == 0) {
    res.witness = VertexSet(0);
    return res;
  }

  VertexSet incumbent = greedy_dominating_set(g);
  if (seed) {
    if (!is_dominating(g, *seed))
      throw std::invalid_argument(
          "exact_domination_number: seed is not a dominating set");
    if (seed->count() < incumbent.count()) incumbent = *seed;
  }

  const int root_lower =
      disjoint_neighborhood_bound(nbhd, VertexSet::full(order));
  const auto deadline = Clock::now() + budget;
  DominationSearch search(nbhd, order, deadline, std::move(incumbent));

  if (root_lower < search.best_size) {
    VertexSet dominated(order);
    search.run(dominated, 0);
  }

  res.witness = search.best;
  res.nodes = search.nodes;
  if (search.timed_out) {
    res.status = SolveStatus::Timeout;
    res.value = search.best_size;
    res.lower = root_lower;
    res.upper = search.best_size;
  } else {
    res.status = SolveStatus::Optimal;
    res.value = res.lower = res.upper = search.best_size;
  }
  return res;
}

SolveResult exact_packing_number(const FiniteGraph& g,
                                 std::chrono::milliseconds budget) {
  const auto nbhd = g.closed_neighborhood_masks();
  const int order = g.order();
  SolveResult res;
  if (order == 0) {
    res.witness = VertexSet(0);
    return res;
  }

  const auto conf = conflict_masks(nbhd, order);
  VertexSet incumbent = greedy_packing(conf, order);
  const auto deadline = Clock::now() + budget;
  PackingSearch search(conf, order, deadline, std::move(incumbent));

  const int root_upper = search.clique_cover_bound(VertexSet::full(order));
  if (root_upper > search.best_size) search.run(VertexSet::full(order), 0);

  res.witness = search.best;
  res.nodes = search.nodes;
  if (search.timed_out) {
    res.status = SolveStatus::Timeout;
    res.value = search.best_size;
    res.lower = search.best_size;
    res.upper = root_upper;
  } else {
    res.status = SolveStatus::Optimal;
    res.value = res.lower = res.upper = search.best_size;
  }

  // a packing witness must have pairwise disjoint closed neighborhoods
  VertexSet blocked(order);
  bool feasible = true;
  res.witness.for_each([&](int v) {
    if (nbhd[v].intersects(blocked)) feasible = false;
    blocked |= nbhd[v];
  });
  if (!feasible)
    throw std::logic_error("exact_packing_number: infeasible witness");
  return res;
}

bool check_swap_condition(int n, const std::vector<GridPoint>& base,
                          const std::vector<GridPoint>& remove,
                          const std::vector<GridPoint>& add) {
  const Region triangle = Region::inner_triangle(n);

  auto sorted = [](std::vector<GridPoint> v) {
    std::sort(v.begin(), v.end(), row_major_less);
    return v;
  };
  const std::vector<GridPoint> base_s = sorted(base);
  const std::vector<GridPoint> remove_s = sorted(remove);
  const std::vector<GridPoint> add_s = sorted(add);

  auto inside = [&](const std::vector<GridPoint>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](GridPoint p) { return triangle.contains(p); });
  };
  if (!inside(base_s) || !inside(remove_s) || !inside(add_s))
    throw std::invalid_argument(
        "check_swap_condition: point outside the triangle");
  if (!std::includes(base_s.begin(), base_s.end(), remove_s.begin(),
                     remove_s.end(), row_major_less))
    throw std::invalid_argument(
        "check_swap_condition: removal set is not part of the base set");
  for (GridPoint p : add_s)
    if (std::binary_search(base_s.begin(), base_s.end(), p, row_major_less))
      throw std::invalid_argument(
          "check_swap_condition: addition already in the base set");

  std::vector<GridPoint> swapped;
  std::set_difference(base_s.begin(), base_s.end(), remove_s.begin(),
                      remove_s.end(), std::back_inserter(swapped),
                      row_major_less);
  swapped.insert(swapped.end(), add_s.begin(), add_s.end());
  std::sort(swapped.begin(), swapped.end(), row_major_less);

  const std::vector<GridPoint> before = closed_neighborhood(base_s, triangle);
  const std::vector<GridPoint> after = closed_neighborhood(swapped, triangle);
  return std::includes(after.begin(), after.end(), before.begin(), before.end(),
                       row_major_less);
}

}  // namespace tokendom
