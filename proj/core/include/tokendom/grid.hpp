#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace tokendom {

// Lattice point of the grid graph on Z^2: i is the column, j the row.
// Two points are adjacent iff their coordinates differ by 1 in exactly one
// component (Manhattan distance 1).
struct GridPoint {
  int i = 0;
  int j = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Canonical order used everywhere (enumeration, serialization, rendering):
// row-major ascending, i.e. by j first, then i.
constexpr bool row_major_less(GridPoint a, GridPoint b) {
  return a.j != b.j ? a.j < b.j : a.i < b.i;
}

struct GridPointHash {
  std::size_t operator()(GridPoint p) const {
    auto h = std::hash<long long>{};
    return h((static_cast<long long>(p.i) << 32) ^ static_cast<unsigned>(p.j));
  }
};

// A finite vertex domain of the grid. Four shapes are supported:
//
//   window(i0,i1,j0,j1)   the rectangle i0<=i<=i1, j0<=j<=j1
//   staircase(n)          {(i,j): 0<=i,j<=n, i-j<=1} plus the tip (n+1,n)
//   inner_triangle(n)     {(i,j): 1<=i<=j<=n-1}, index-compatible with the
//                         2-token graph of the n-path
//   strip(n,k,r)          staircase(n) points with k<=j<=r; when r=n this
//                         includes the tip (n+1,n)
//
// Vertices are enumerated row-major ascending, and index_of() gives the
// position of a point in that enumeration in O(1).
class Region {
 public:
  enum class Kind { Window, Staircase, InnerTriangle, Strip };

  static Region window(int i_min, int i_max, int j_min, int j_max);
  static Region staircase(int n);       // n >= 2
  static Region inner_triangle(int n);  // n >= 2
  static Region strip(int n, int k, int r);  // n >= 2, 0 <= k < r <= n

  Kind kind() const { return kind_; }
  int n() const { return n_; }

  bool contains(GridPoint p) const;
  std::size_t size() const;
  std::size_t index_of(GridPoint p) const;  // requires contains(p)
  std::vector<GridPoint> vertices() const;  // row-major ascending

 private:
  Region(Kind kind, int n, int a, int b, int c, int d)
      : kind_(kind), n_(n), i_min_(a), i_max_(b), j_min_(c), j_max_(d) {}

  Kind kind_;
  int n_ = 0;                    // region scale (unused for Window)
  int i_min_ = 0, i_max_ = 0;    // Window bounds
  int j_min_ = 0, j_max_ = 0;    // Window bounds / Strip row range
};

// Neighbors of p inside the region; p itself must belong to the region.
// At most four points, returned row-major ascending.
std::vector<GridPoint> neighbors(GridPoint p, const Region& region);

// N[U] restricted to the region: (U within the region) together with every
// region point adjacent to some member of U. U itself may contain points
// outside the region. Result is row-major sorted without duplicates.
std::vector<GridPoint> closed_neighborhood(const std::vector<GridPoint>& points,
                                           const Region& region);

// True iff N[points] covers the whole region.
bool covers_region(const std::vector<GridPoint>& points, const Region& region);

}  // namespace tokendom
