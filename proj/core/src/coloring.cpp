#include "tokendom/coloring.hpp"

#include <stdexcept>
#include <string>

namespace tokendom {

char coloring_name(Coloring h) { return h == Coloring::F ? 'f' : 'g'; }

Coloring coloring_from_name(char c) {
  if (c == 'f') return Coloring::F;
  if (c == 'g') return Coloring::G;
  throw std::invalid_argument(std::string("unknown coloring name: ") + c);
}

int color(Coloring h, int t, GridPoint p) {
  long long x = static_cast<long long>(p.i) - t;
  long long y = p.j;
  long long v = (h == Coloring::F) ? x + 2 * y : 2 * x + y;
  return static_cast<int>(((v % 5) + 5) % 5);
}

std::vector<GridPoint> color_class(const Region& region, const ColorSpec& spec) {
  std::vector<GridPoint> out;
  for (GridPoint p : region.vertices())
    if (color(spec, p) == spec.r) out.push_back(p);
  return out;
}

int strip_class_count(Coloring h, int l, int n, int i) {
  if (i < 4 || i > n)
    throw std::invalid_argument("strip_class_count: requires 4 <= i <= n, got i=" +
                                std::to_string(i) + " n=" + std::to_string(n));
  int count = 0;
  for (GridPoint p : Region::strip(n, i - 4, i).vertices())
    if (color(h, 0, p) == l) ++count;
  if (count != i)
    throw std::logic_error("strip_class_count: enumeration gave " +
                           std::to_string(count) + " for i=" + std::to_string(i));
  return count;
}

}  // namespace tokendom
