#pragma once

#include <string>
#include <vector>

#include "tokendom/coloring.hpp"
#include "tokendom/grid.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

// closed-form size of the constructed set, defined for n >= 4
int d_of(int n);

// closed-form packing number of the two-token path graph on n+1 labels,
// defined for n >= 6
int a_of(int n);

// a_of(n-1); valid lower bound on the domination number for n >= 7
int lower_bound(int n);

struct CaseSelection {
  int residue = 0;  // n mod 5
  Coloring h = Coloring::F;
  int color = 0;  // residue class selected for this case
  friend bool operator==(const CaseSelection&, const CaseSelection&) = default;
};

CaseSelection select_case(int n);  // n >= 4

// repair sets along the triangle boundary: points of the inner triangle
// standing in for class members that fall outside it
struct BoundarySets {
  std::vector<GridPoint> left;
  std::vector<GridPoint> up;
  std::vector<GridPoint> down;
  std::vector<GridPoint> overlap;  // points claimed by more than one side
};

BoundarySets boundary_sets(Coloring h, int r, int n);  // n >= 4

// class members inside the triangle plus the boundary repairs, row-major.
// Checks the size identity (staircase class size minus overlap) and that the
// result dominates the triangle; throws ConstructionError otherwise.
std::vector<GridPoint> base_dominating_set(Coloring h, int r, int n);

struct CornerPatches {
  std::vector<GridPoint> remove;  // row-major sorted
  std::vector<GridPoint> add;     // row-major sorted
};

CornerPatches corner_patches(int n);  // n >= 20

// remove must lie inside base, add must be fresh triangle points, both
// duplicate-free; throws ConstructionError naming the offending coordinate
void validate_patches(const CornerPatches& patches,
                      const std::vector<GridPoint>& base, int n);

struct Certificate {
  int n = 0;
  CaseSelection selection;
  std::vector<GridPoint> grid_set;   // row-major sorted
  std::vector<TokenPair> token_set;  // lexicographic
  int size = 0;
  int claimed_bound = 0;  // d_of(n)
  int color_class_size = 0;
  int overlap_size = 0;
  int base_size = 0;
  int removed = 0;
  int added = 0;
  bool verified = false;
};

// full pipeline for n >= 20: case selection, base set, corner patches,
// domination + exact-size checks. Throws ConstructionError if any check fails.
Certificate construct_dominating_set(int n);

// dry run of the pipeline for 13 <= n <= 19, where the corner templates are
// not guaranteed to apply. Duplicate template coordinates are collapsed and
// nothing throws; the result records what held and what broke.
struct AttemptResult {
  int n = 0;
  CaseSelection selection;
  int size = 0;
  int target = 0;
  bool dominating = false;
  bool size_matches = false;
  std::vector<GridPoint> out_of_range;  // patch coords outside the triangle
  bool validated = false;
  std::string note;
};

AttemptResult attempt_construction(int n);

}  // namespace tokendom
