#include "tokendom/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tokendom/vertex_set.hpp"

namespace tokendom {

namespace {

// length of staircase row j (0 <= j <= n): rows below n stop at the diagonal
// column j+1, row n carries the tip (n+1,n)
int staircase_row_len(int n, int j) { return j < n ? j + 2 : n + 2; }

}  // namespace

Region Region::window(int i_min, int i_max, int j_min, int j_max) {
  if (i_min > i_max || j_min > j_max)
    throw std::invalid_argument("Region::window: empty bounds");
  return Region(Kind::Window, 0, i_min, i_max, j_min, j_max);
}

Region Region::staircase(int n) {
  if (n < 2) throw std::invalid_argument("Region::staircase: n must be >= 2");
  return Region(Kind::Staircase, n, 0, 0, 0, 0);
}

Region Region::inner_triangle(int n) {
  if (n < 2)
    throw std::invalid_argument("Region::inner_triangle: n must be >= 2");
  return Region(Kind::InnerTriangle, n, 0, 0, 0, 0);
}

Region Region::strip(int n, int k, int r) {
  if (n < 2) throw std::invalid_argument("Region::strip: n must be >= 2");
  if (k < 0 || k >= r || r > n)
    throw std::invalid_argument("Region::strip: requires 0 <= k < r <= n, got k=" +
                                std::to_string(k) + " r=" + std::to_string(r));
  return Region(Kind::Strip, n, 0, 0, k, r);
}

bool Region::contains(GridPoint p) const {
  switch (kind_) {
    case Kind::Window:
      return i_min_ <= p.i && p.i <= i_max_ && j_min_ <= p.j && p.j <= j_max_;
    case Kind::Staircase:
      return (0 <= p.i && p.i <= n_ && 0 <= p.j && p.j <= n_ && p.i - p.j <= 1) ||
             (p.i == n_ + 1 && p.j == n_);
    case Kind::InnerTriangle:
      return 1 <= p.i && p.i <= p.j && p.j <= n_ - 1;
    case Kind::Strip:
      return p.j >= j_min_ && p.j <= j_max_ &&
             ((0 <= p.i && p.i <= n_ && 0 <= p.j && p.j <= n_ && p.i - p.j <= 1) ||
              (p.i == n_ + 1 && p.j == n_));
  }
  return false;
}

std::size_t Region::size() const {
  switch (kind_) {
    case Kind::Window:
      return static_cast<std::size_t>(i_max_ - i_min_ + 1) *
             static_cast<std::size_t>(j_max_ - j_min_ + 1);
    case Kind::Staircase:
      return static_cast<std::size_t>(n_ + 1) * (n_ + 4) / 2;
    case Kind::InnerTriangle:
      return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    case Kind::Strip: {
      std::size_t total = 0;
      for (int j = j_min_; j <= j_max_; ++j) total += staircase_row_len(n_, j);
      return total;
    }
  }
  return 0;
}

std::size_t Region::index_of(GridPoint p) const {
  switch (kind_) {
    case Kind::Window:
      return static_cast<std::size_t>(p.j - j_min_) * (i_max_ - i_min_ + 1) +
             (p.i - i_min_);
    case Kind::Staircase:
      // rows 0..j-1 hold sum_{y<j}(y+2) = j(j+3)/2 points
      return static_cast<std::size_t>(p.j) * (p.j + 3) / 2 + p.i;
    case Kind::InnerTriangle:
      // rows 1..j-1 hold j(j-1)/2 points
      return static_cast<std::size_t>(p.j) * (p.j - 1) / 2 + (p.i - 1);
    case Kind::Strip: {
      // rows j_min_..p.j-1 are all below n, so each has y+2 points
      std::size_t skipped =
          static_cast<std::size_t>(p.j - j_min_) * (p.j + j_min_ + 3) / 2;
      return skipped + p.i;
    }
  }
  return 0;
}

std::vector<GridPoint> Region::vertices() const {
  std::vector<GridPoint> out;
  out.reserve(size());
  switch (kind_) {
    case Kind::Window:
      for (int j = j_min_; j <= j_max_; ++j)
        for (int i = i_min_; i <= i_max_; ++i) out.push_back({i, j});
      break;
    case Kind::Staircase:
      for (int j = 0; j <= n_; ++j)
        for (int i = 0; i < staircase_row_len(n_, j); ++i) out.push_back({i, j});
      break;
    case Kind::InnerTriangle:
      for (int j = 1; j <= n_ - 1; ++j)
        for (int i = 1; i <= j; ++i) out.push_back({i, j});
      break;
    case Kind::Strip:
      for (int j = j_min_; j <= j_max_; ++j)
        for (int i = 0; i < staircase_row_len(n_, j); ++i) out.push_back({i, j});
      break;
  }
  return out;
}

std::vector<GridPoint> neighbors(GridPoint p, const Region& region) {
  if (!region.contains(p))
    throw std::invalid_argument("neighbors: point (" + std::to_string(p.i) + "," +
                                std::to_string(p.j) + ") is outside the region");
  std::vector<GridPoint> out;
  // generated in row-major order already
  const GridPoint candidates[4] = {
      {p.i, p.j - 1}, {p.i - 1, p.j}, {p.i + 1, p.j}, {p.i, p.j + 1}};
  for (GridPoint q : candidates)
    if (region.contains(q)) out.push_back(q);
  return out;
}

std::vector<GridPoint> closed_neighborhood(const std::vector<GridPoint>& points,
                                           const Region& region) {
  std::vector<GridPoint> out;
  out.reserve(points.size() * 5);
  for (GridPoint p : points) {
    if (region.contains(p)) out.push_back(p);
    const GridPoint candidates[4] = {
        {p.i, p.j - 1}, {p.i - 1, p.j}, {p.i + 1, p.j}, {p.i, p.j + 1}};
    for (GridPoint q : candidates)
      if (region.contains(q)) out.push_back(q);
  }
  std::sort(out.begin(), out.end(), row_major_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool covers_region(const std::vector<GridPoint>& points, const Region& region) {
  VertexSet dominated(region.size());
  for (GridPoint p : points) {
    if (region.contains(p)) dominated.set(region.index_of(p));
    const GridPoint candidates[4] = {
        {p.i, p.j - 1}, {p.i - 1, p.j}, {p.i + 1, p.j}, {p.i, p.j + 1}};
    for (GridPoint q : candidates)
      if (region.contains(q)) dominated.set(region.index_of(q));
  }
  return dominated.is_full();
}

}  // namespace tokendom
