#pragma once

#include <functional>
#include <string>

#include "tokendom/coloring.hpp"

namespace tokendom {

// Exhaustive checks of the structural facts the construction relies on:
// both colorings are proper on the grid, every chromatic class is a perfect
// code, colors repeat with period 5 along rows, columns and the diagonal,
// and translated classes coincide with untranslated ones.
//
// The color function is injectable so a corrupted coloring can be fed in as
// a negative control; by default the real one is used.

using ColorFn = std::function<int(Coloring, int, GridPoint)>;

struct PropertyOptions {
  int radius = 40;          // checks run on the window [-radius, radius]^2
  int max_n = 50;           // strip-count law checked for 4 <= i <= n <= max_n
  int max_translation = 10; // translations t in 0..max_translation
  ColorFn color_fn;         // empty -> color()
};

struct PropertyCheck {
  bool ok = true;
  std::string failed_property;  // empty when ok
  std::string counterexample;   // first failure, human readable
};

PropertyCheck check_proper_coloring(const PropertyOptions& opts);
PropertyCheck check_perfect_domination(const PropertyOptions& opts);
PropertyCheck check_periodicity(const PropertyOptions& opts);
PropertyCheck check_translation_identity(const PropertyOptions& opts);
PropertyCheck check_strip_counts(const PropertyOptions& opts);

// Runs all of the above in order and reports the first failure.
PropertyCheck run_property_suite(const PropertyOptions& opts);

}  // namespace tokendom
