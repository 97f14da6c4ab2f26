#include <doctest.h>

#include <chrono>
#include <stdexcept>
#include <vector>

#include <tokendom/construction.hpp>
#include <tokendom/known_values.hpp>
#include <tokendom/solvers.hpp>
#include <tokendom/token_graph.hpp>

using namespace tokendom;
using namespace std::chrono_literals;

namespace {

constexpr auto kBudget = 60000ms;

VertexSet set_of(int order, std::initializer_list<int> bits) {
  VertexSet s(order);
  for (int b : bits) s.set(b);
  return s;
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("is_dominating on a path") {
  const FiniteGraph p = path_graph(5);
  CHECK(is_dominating(p, set_of(5, {1, 3})));
  CHECK(is_dominating(p, set_of(5, {0, 2, 4})));
  CHECK_FALSE(is_dominating(p, set_of(5, {0})));
  CHECK_FALSE(is_dominating(p, set_of(5, {})));
  CHECK_THROWS_AS(is_dominating(p, set_of(4, {0})), std::invalid_argument);
}

TEST_CASE("greedy set is feasible and deterministic") {
  for (int n : {4, 7, 10}) {
    const FiniteGraph g = token_graph_of_path(n);
    const VertexSet a = greedy_dominating_set(g);
    const VertexSet b = greedy_dominating_set(g);
    CHECK(is_dominating(g, a));
    CHECK(a == b);
  }
}

TEST_CASE("packing-style bound never exceeds the optimum") {
  for (int n = 2; n <= 9; ++n) {
    const FiniteGraph g = token_graph_of_path(n);
    const int lb = packing_style_lower_bound(g);
    const SolveResult res = exact_domination_number(g, kBudget);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(lb <= res.value);
  }
}

TEST_CASE("exact domination matches the published values") {
  for (int n = 2; n <= 10; ++n) {
    const FiniteGraph g = token_graph_of_path(n);
    const SolveResult res = exact_domination_number(g, kBudget);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.value == *known_gamma(n));
    CHECK(res.lower == res.value);
    CHECK(res.upper == res.value);
    CHECK(res.witness.count() == static_cast<std::size_t>(res.value));
    CHECK(is_dominating(g, res.witness));
  }
}

TEST_CASE("seed witness is honored and validated") {
  const FiniteGraph g = token_graph_of_path(8);
  const VertexSet greedy = greedy_dominating_set(g);
  const SolveResult res = exact_domination_number(g, kBudget, &greedy);
  CHECK(res.status == SolveStatus::Optimal);
  CHECK(res.value == 8);

  const VertexSet bogus = set_of(g.order(), {0});
  CHECK_THROWS_AS(exact_domination_number(g, kBudget, &bogus),
                  std::invalid_argument);
}

TEST_CASE("domination solver reports a timeout bracket") {
  const FiniteGraph g = token_graph_of_path(13);
  const SolveResult res = exact_domination_number(g, 1ms);
  if (res.status == SolveStatus::Timeout) {
    CHECK(res.lower <= res.upper);
    CHECK(res.value == res.upper);
    CHECK(is_dominating(g, res.witness));
  } else {
    CHECK(res.value == *known_gamma(13));
  }
}

TEST_CASE("exact packing matches the closed form") {
  for (int n = 6; n <= 9; ++n) {
    const FiniteGraph g = token_graph_of_path(n + 1);
    const SolveResult res = exact_packing_number(g, kBudget);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.value == a_of(n));
  }
}

TEST_CASE("packing witness has disjoint closed neighborhoods") {
  const FiniteGraph g = token_graph_of_path(8);
  const SolveResult res = exact_packing_number(g, kBudget);
  REQUIRE(res.status == SolveStatus::Optimal);
  const auto masks = g.closed_neighborhood_masks();
  std::vector<int> picked = res.witness.to_indices();
  for (std::size_t x = 0; x < picked.size(); ++x)
    for (std::size_t y = x + 1; y < picked.size(); ++y)
      CHECK_FALSE(masks[picked[x]].intersects(masks[picked[y]]));
}

TEST_CASE("packing never exceeds domination") {
  for (int n = 2; n <= 9; ++n) {
    const FiniteGraph g = token_graph_of_path(n);
    const SolveResult rho = exact_packing_number(g, kBudget);
    const SolveResult gam = exact_domination_number(g, kBudget);
    REQUIRE(rho.status == SolveStatus::Optimal);
    REQUIRE(gam.status == SolveStatus::Optimal);
    CHECK(rho.value <= gam.value);
  }
}

TEST_CASE("swap condition accepts the real corner patches") {
  for (int n : {20, 21, 22, 23, 24}) {
    const CaseSelection sel = select_case(n);
    const auto base = base_dominating_set(sel.h, sel.color, n);
    const CornerPatches patches = corner_patches(n);
    CHECK(check_swap_condition(n, base, patches.remove, patches.add));
  }
}

TEST_CASE("swap condition rejects a coverage-losing trade") {
  const CaseSelection sel = select_case(20);
  const auto base = base_dominating_set(sel.h, sel.color, 20);
  // drop one base vertex and add a far-away one: coverage around the dropped
  // vertex is lost
  const std::vector<GridPoint> remove = {base.front()};
  std::vector<GridPoint> add;
  for (GridPoint p : Region::inner_triangle(20).vertices()) {
    bool in_base =
        std::binary_search(base.begin(), base.end(), p, row_major_less);
    if (!in_base && p.j >= 18) {
      add = {p};
      break;
    }
  }
  REQUIRE_FALSE(add.empty());
  CHECK_FALSE(check_swap_condition(20, base, remove, add));
}

TEST_CASE("swap condition validates its inputs") {
  const CaseSelection sel = select_case(20);
  const auto base = base_dominating_set(sel.h, sel.color, 20);
  CHECK_THROWS_AS(check_swap_condition(20, base, {{1, 1}}, {}),
                  std::invalid_argument);  // (1,1) not in the base
  CHECK_THROWS_AS(check_swap_condition(20, base, {}, {base.front()}),
                  std::invalid_argument);  // addition already present
  CHECK_THROWS_AS(check_swap_condition(20, base, {}, {{0, 5}}),
                  std::invalid_argument);  // outside the triangle
}

}  // TEST_SUITE
