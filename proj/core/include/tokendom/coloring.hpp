#pragma once

#include <vector>

#include "tokendom/grid.hpp"

namespace tokendom {

// The two diagonal 5-colorings of the grid:
//   F: (x,y) -> (x + 2y) mod 5
//   G: (x,y) -> (2x + y) mod 5
// Every chromatic class of either coloring is a perfect code of the grid:
// each closed neighborhood contains exactly one member of each class.
enum class Coloring { F, G };

char coloring_name(Coloring h);           // 'f' or 'g'
Coloring coloring_from_name(char c);      // inverse, throws on other input

// Coloring choice plus a horizontal translation t and a residue r in Z5.
// The t-translation evaluates the base coloring at (i - t, j).
struct ColorSpec {
  Coloring h = Coloring::F;
  int t = 0;
  int r = 0;

  friend bool operator==(const ColorSpec&, const ColorSpec&) = default;
};

// Color of p under the t-translation of h. Uses the mathematical modulus, so
// the result is in 0..4 for negative coordinates too.
int color(Coloring h, int t, GridPoint p);

inline int color(const ColorSpec& spec, GridPoint p) {
  return color(spec.h, spec.t, p);
}

// All region points whose color equals spec.r, row-major ascending.
std::vector<GridPoint> color_class(const Region& region, const ColorSpec& spec);

// |strip(n, i-4, i) restricted to color l of h|, computed by enumeration.
// Requires 4 <= i <= n. The count is always exactly i (five consecutive rows
// of the staircase hold 5i points, split evenly among the five colors); a
// different enumeration result signals an internal bug and throws.
int strip_class_count(Coloring h, int l, int n, int i);

}  // namespace tokendom
