#include "tokendom/construction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "tokendom/errors.hpp"

namespace tokendom {

namespace {

int exact_tenth(int num) {
  if (num % 10 != 0) throw std::logic_error("closed form not divisible by 10");
  return num / 10;
}

std::string point_str(GridPoint p) {
  std::ostringstream os;
  os << "(" << p.i << "," << p.j << ")";
  return os.str();
}

void sort_points(std::vector<GridPoint>& v) {
  std::sort(v.begin(), v.end(), row_major_less);
}

void sort_unique(std::vector<GridPoint>& v) {
  sort_points(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<GridPoint> merge_union(std::vector<GridPoint> a,
                                   const std::vector<GridPoint>& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_unique(a);
  return a;
}

std::vector<GridPoint> sorted_difference(const std::vector<GridPoint>& a,
                                         const std::vector<GridPoint>& b) {
  std::vector<GridPoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), row_major_less);
  return out;
}

std::vector<GridPoint> sorted_intersection(const std::vector<GridPoint>& a,
                                           const std::vector<GridPoint>& b) {
  std::vector<GridPoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out), row_major_less);
  return out;
}

bool sorted_contains(const std::vector<GridPoint>& v, GridPoint p) {
  return std::binary_search(v.begin(), v.end(), p, row_major_less);
}

// raw corner templates per residue class; for n < 20 the lists may repeat or
// leave the triangle, which attempt_construction reports rather than rejects
std::pair<std::vector<GridPoint>, std::vector<GridPoint>> patch_lists(int n) {
  switch (n % 5) {
    case 0:
      return {{{4, n - 1}, {n - 1, n - 1}, {1, n - 1}, {1, n - 3}, {n - 6, n - 1}, {n - 4, n - 1}},
              {{3, n - 1}, {1, n - 2}, {n - 5, n - 1}, {n - 2, n - 1}}};
    case 1:
      return {{{1, 9}, {1, 7}, {2, 5}, {2, n - 1}, {4, n - 1}},
              {{1, 8}, {2, 6}, {3, n - 1}}};
    case 2:
      return {{{1, 1}, {1, 3}, {1, 5}, {1, 8}, {1, 13}, {1, 15}, {2, 6}, {2, 11},
               {3, 9}, {4, 7}, {6, 8}, {2, n - 1}, {4, n - 1}, {n - 3, n - 1}, {n - 1, n - 1}},
              {{1, 6}, {1, 14}, {2, 4}, {2, 8}, {2, 12}, {3, 6}, {3, 10}, {4, 8},
               {7, 9}, {3, n - 1}, {n - 2, n - 1}}};
    case 3:
      return {{{1, 7}, {1, 9}, {2, 5}, {1, n - 1}, {1, n - 4}, {3, n - 1}, {n - 1, n - 1}},
              {{1, 8}, {2, 6}, {2, n - 1}, {1, n - 3}}};
    default:
      return {{{1, 1}, {1, 3}, {1, 5}, {1, 8}, {1, 13}, {1, 15}, {2, 6}, {2, 11},
               {3, 9}, {4, 7}, {6, 8}, {1, n - 4}, {1, n - 1}, {3, n - 1}, {n - 6, n - 1}, {n - 3, n - 1}},
              {{1, 6}, {1, 14}, {2, 4}, {2, 8}, {2, 12}, {3, 6}, {3, 10}, {4, 8},
               {7, 9}, {1, n - 3}, {2, n - 1}, {n - 5, n - 1}}};
  }
}

}  // namespace

int d_of(int n) {
  if (n < 4) throw std::invalid_argument("d_of: defined for n >= 4");
  switch (n % 5) {
    case 0: return exact_tenth(n * n + 5 * n - 30);
    case 1:
    case 4: return exact_tenth(n * n + 5 * n - 36);
    default: return exact_tenth(n * n + 5 * n - 34);
  }
}

int a_of(int n) {
  if (n < 6) throw std::invalid_argument("a_of: defined for n >= 6");
  switch (n % 5) {
    case 0:
    case 4: return exact_tenth(n * n + n + 20);
    case 1:
    case 3: return exact_tenth(n * n + n + 18);
    default: return exact_tenth(n * n + n + 14);
  }
}

int lower_bound(int n) {
  if (n < 7) throw std::invalid_argument("lower_bound: defined for n >= 7");
  return a_of(n - 1);
}

CaseSelection select_case(int n) {
  if (n < 4) throw std::invalid_argument("select_case: n must be >= 4");
  switch (n % 5) {
    case 0: return {0, Coloring::F, 4};
    case 1: return {1, Coloring::G, 4};
    case 2: return {2, Coloring::G, 0};
    case 3: return {3, Coloring::G, 4};
    default: return {4, Coloring::G, 0};
  }
}

BoundarySets boundary_sets(Coloring h, int r, int n) {
  if (n < 4) throw std::invalid_argument("boundary_sets: n must be >= 4");
  auto in_class = [&](int i, int j) { return color(h, 0, {i, j}) == r; };

  BoundarySets x;
  // class members on the left column project one step right
  for (int i = 1; i < n; ++i)
    if (in_class(0, i)) x.left.push_back({1, i});
  if (in_class(0, 0)) x.left.push_back({1, 1});
  if (in_class(0, n)) x.left.push_back({1, n - 1});

  // class members on the top row project one step down
  for (int i = 1; i < n; ++i)
    if (in_class(i, n)) x.up.push_back({i, n - 1});
  if (in_class(n, n) || in_class(n + 1, n)) x.up.push_back({n - 1, n - 1});

  // class members on the subdiagonal reflect across the diagonal
  for (int i = 2; i < n; ++i)
    if (in_class(i, i - 1)) x.down.push_back({i - 1, i});
  if (in_class(1, 0)) x.down.push_back({1, 1});
  if (in_class(n, n - 1)) x.down.push_back({n - 1, n - 1});

  sort_unique(x.left);
  sort_unique(x.up);
  sort_unique(x.down);
  x.overlap = merge_union(
      merge_union(sorted_intersection(x.left, x.up), sorted_intersection(x.left, x.down)),
      sorted_intersection(x.up, x.down));
  return x;
}

std::vector<GridPoint> base_dominating_set(Coloring h, int r, int n) {
  const Region triangle = Region::inner_triangle(n);
  const ColorSpec spec{h, 0, r};
  const BoundarySets x = boundary_sets(h, r, n);

  std::vector<GridPoint> base = color_class(triangle, spec);
  base = merge_union(std::move(base), x.left);
  base = merge_union(std::move(base), x.up);
  base = merge_union(std::move(base), x.down);

  const std::size_t staircase_class = color_class(Region::staircase(n), spec).size();
  if (base.size() != staircase_class - x.overlap.size()) {
    std::ostringstream os;
    os << "base set size " << base.size() << " != class size " << staircase_class
       << " - overlap " << x.overlap.size() << " at n=" << n;
    throw ConstructionError(os.str());
  }
  if (!covers_region(base, triangle))
    throw ConstructionError("base set does not dominate the triangle at n=" +
                            std::to_string(n));
  return base;
}

CornerPatches corner_patches(int n) {
  if (n < 20) throw std::invalid_argument("corner_patches: n must be >= 20");
  auto [remove, add] = patch_lists(n);
  sort_points(remove);
  sort_points(add);
  return {std::move(remove), std::move(add)};
}

void validate_patches(const CornerPatches& patches,
                      const std::vector<GridPoint>& base, int n) {
  const Region triangle = Region::inner_triangle(n);
  auto check_distinct = [](const std::vector<GridPoint>& v, const char* what) {
    for (std::size_t k = 1; k < v.size(); ++k)
      if (v[k] == v[k - 1])
        throw ConstructionError(std::string("duplicate ") + what +
                                " coordinate " + point_str(v[k]));
  };
  check_distinct(patches.remove, "removal");
  check_distinct(patches.add, "addition");
  for (GridPoint p : patches.remove)
    if (!sorted_contains(base, p))
      throw ConstructionError("removal " + point_str(p) + " is not in the base set");
  for (GridPoint p : patches.add) {
    if (!triangle.contains(p))
      throw ConstructionError("addition " + point_str(p) + " is outside the triangle");
    if (sorted_contains(base, p))
      throw ConstructionError("addition " + point_str(p) + " is already in the base set");
  }
}

Certificate construct_dominating_set(int n) {
  if (n < 20)
    throw std::invalid_argument("construct_dominating_set: n must be >= 20");
  const CaseSelection sel = select_case(n);
  const Region triangle = Region::inner_triangle(n);
  const BoundarySets x = boundary_sets(sel.h, sel.color, n);
  const std::vector<GridPoint> base = base_dominating_set(sel.h, sel.color, n);
  const CornerPatches patches = corner_patches(n);
  validate_patches(patches, base, n);

  std::vector<GridPoint> final_set =
      merge_union(sorted_difference(base, patches.remove), patches.add);
  if (!covers_region(final_set, triangle))
    throw ConstructionError("final set does not dominate the triangle at n=" +
                            std::to_string(n));
  const int target = d_of(n);
  if (static_cast<int>(final_set.size()) != target) {
    std::ostringstream os;
    os << "final set size " << final_set.size() << " != d(" << n << ") = " << target;
    throw ConstructionError(os.str());
  }

  Certificate cert;
  cert.n = n;
  cert.selection = sel;
  cert.token_set.reserve(final_set.size());
  for (GridPoint p : final_set) cert.token_set.push_back(grid_to_token(p));
  std::sort(cert.token_set.begin(), cert.token_set.end(), lex_less);
  cert.grid_set = std::move(final_set);
  cert.size = static_cast<int>(cert.grid_set.size());
  cert.claimed_bound = target;
  cert.color_class_size = static_cast<int>(
      color_class(Region::staircase(n), {sel.h, 0, sel.color}).size());
  cert.overlap_size = static_cast<int>(x.overlap.size());
  cert.base_size = static_cast<int>(base.size());
  cert.removed = static_cast<int>(patches.remove.size());
  cert.added = static_cast<int>(patches.add.size());
  cert.verified = true;
  return cert;
}

AttemptResult attempt_construction(int n) {
  if (n < 13 || n > 19)
    throw std::invalid_argument("attempt_construction: n must be in 13..19");
  AttemptResult res;
  res.n = n;
  res.selection = select_case(n);
  res.target = d_of(n);

  const Region triangle = Region::inner_triangle(n);
  const std::vector<GridPoint> base =
      base_dominating_set(res.selection.h, res.selection.color, n);

  auto [remove, add] = patch_lists(n);
  sort_unique(remove);
  sort_unique(add);
  for (GridPoint p : remove)
    if (!triangle.contains(p)) res.out_of_range.push_back(p);
  for (GridPoint p : add)
    if (!triangle.contains(p)) res.out_of_range.push_back(p);
  sort_unique(res.out_of_range);

  const std::vector<GridPoint> final_set =
      merge_union(sorted_difference(base, remove), add);
  res.size = static_cast<int>(final_set.size());
  res.dominating = covers_region(final_set, triangle);
  res.size_matches = res.size == res.target;
  res.validated = res.dominating && res.size_matches && res.out_of_range.empty();

  std::ostringstream os;
  if (res.validated) {
    os << "construction validates at n=" << n << " with size " << res.size;
  } else {
    os << "construction not certified at n=" << n << ":";
    if (!res.out_of_range.empty()) {
      os << " patch coordinates outside the triangle:";
      for (GridPoint p : res.out_of_range) os << " " << point_str(p);
      os << ";";
    }
    if (!res.dominating) os << " final set does not dominate;";
    if (!res.size_matches) os << " size " << res.size << " != " << res.target << ";";
  }
  res.note = os.str();
  if (!res.note.empty() && res.note.back() == ';') res.note.pop_back();
  return res;
}

}  // namespace tokendom
