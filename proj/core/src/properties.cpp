#include "tokendom/properties.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace tokendom {

namespace {

ColorFn effective_fn(const PropertyOptions& opts) {
  if (opts.color_fn) return opts.color_fn;
  return [](Coloring h, int t, GridPoint p) { return color(h, t, p); };
}

std::string point_str(GridPoint p) {
  std::ostringstream os;
  os << "(" << p.i << "," << p.j << ")";
  return os.str();
}

constexpr std::array<Coloring, 2> kBoth = {Coloring::F, Coloring::G};

}  // namespace

PropertyCheck check_proper_coloring(const PropertyOptions& opts) {
  auto fn = effective_fn(opts);
  const int R = opts.radius;
  for (Coloring h : kBoth) {
    for (int t = 0; t <= opts.max_translation; ++t) {
      for (int j = -R; j <= R; ++j) {
        for (int i = -R; i <= R; ++i) {
          GridPoint p{i, j};
          int cp = fn(h, t, p);
          // right and upper neighbor cover every window edge once
          for (GridPoint q : {GridPoint{i + 1, j}, GridPoint{i, j + 1}}) {
            if (q.i > R || q.j > R) continue;
            if (fn(h, t, q) == cp) {
              return {false, "proper coloring",
                      std::string(1, coloring_name(h)) + " t=" + std::to_string(t) +
                          ": adjacent " + point_str(p) + " and " + point_str(q) +
                          " share color " + std::to_string(cp)};
            }
          }
        }
      }
    }
  }
  return {};
}

PropertyCheck check_perfect_domination(const PropertyOptions& opts) {
  auto fn = effective_fn(opts);
  const int R = opts.radius;
  for (Coloring h : kBoth) {
    for (int t = 0; t <= opts.max_translation; ++t) {
      for (int j = -R; j <= R; ++j) {
        for (int i = -R; i <= R; ++i) {
          // N[p] has five points; a perfect code meets it exactly once per color
          unsigned seen = 0;
          for (GridPoint q : {GridPoint{i, j}, GridPoint{i - 1, j},
                              GridPoint{i + 1, j}, GridPoint{i, j - 1},
                              GridPoint{i, j + 1}})
            seen |= 1u << fn(h, t, q);
          if (seen != 0b11111u) {
            return {false, "perfect domination",
                    std::string(1, coloring_name(h)) + " t=" + std::to_string(t) +
                        ": closed neighborhood of " + point_str({i, j}) +
                        " misses a color (mask " + std::to_string(seen) + ")"};
          }
        }
      }
    }
  }
  return {};
}

PropertyCheck check_periodicity(const PropertyOptions& opts) {
  auto fn = effective_fn(opts);
  const int R = opts.radius;
  for (Coloring h : kBoth) {
    const char name = coloring_name(h);
    // same column: colors agree iff rows differ by a multiple of 5
    for (int i = -R; i <= R; ++i)
      for (int j = -R; j <= R; ++j)
        for (int j2 = j; j2 <= R; ++j2) {
          bool same = fn(h, 0, {i, j}) == fn(h, 0, {i, j2});
          if (same != ((j2 - j) % 5 == 0))
            return {false, "periodicity (rows)",
                    std::string(1, name) + ": " + point_str({i, j}) + " vs " +
                        point_str({i, j2})};
        }
    // same row: colors agree iff columns differ by a multiple of 5
    for (int j = -R; j <= R; ++j)
      for (int i = -R; i <= R; ++i)
        for (int i2 = i; i2 <= R; ++i2) {
          bool same = fn(h, 0, {i, j}) == fn(h, 0, {i2, j});
          if (same != ((i2 - i) % 5 == 0))
            return {false, "periodicity (columns)",
                    std::string(1, name) + ": " + point_str({i, j}) + " vs " +
                        point_str({i2, j})};
        }
    // diagonal (i+1, i): colors agree iff offsets differ by a multiple of 5
    for (int i = -R; i <= R - 1; ++i)
      for (int j = i; j <= R - 1; ++j) {
        bool same = fn(h, 0, {i + 1, i}) == fn(h, 0, {j + 1, j});
        if (same != ((j - i) % 5 == 0))
          return {false, "periodicity (diagonal)",
                  std::string(1, name) + ": offsets " + std::to_string(i) +
                      " vs " + std::to_string(j)};
      }
  }
  return {};
}

PropertyCheck check_translation_identity(const PropertyOptions& opts) {
  auto fn = effective_fn(opts);
  const int R = opts.radius;
  for (Coloring h : kBoth) {
    // base classes over the window, one vector per color
    std::array<std::vector<GridPoint>, 5> base{};
    for (int j = -R; j <= R; ++j)
      for (int i = -R; i <= R; ++i) base[fn(h, 0, {i, j})].push_back({i, j});

    for (int t = 0; t <= opts.max_translation; ++t) {
      std::array<std::vector<GridPoint>, 5> shifted{};
      for (int j = -R; j <= R; ++j)
        for (int i = -R; i <= R; ++i) shifted[fn(h, t, {i, j})].push_back({i, j});
      // the class of color h_t(p) under h_t must equal the class of h(p)
      // under h; both contain p, so compare the matched vectors
      for (int c = 0; c < 5; ++c) {
        if (base[c].empty()) continue;
        GridPoint p = base[c].front();
        int ct = fn(h, t, p);
        if (shifted[ct] != base[c])
          return {false, "translation identity",
                  std::string(1, coloring_name(h)) + " t=" + std::to_string(t) +
                      ": classes through " + point_str(p) + " differ"};
      }
    }
  }
  return {};
}

PropertyCheck check_strip_counts(const PropertyOptions& opts) {
  auto fn = effective_fn(opts);
  for (Coloring h : kBoth) {
    for (int l = 0; l < 5; ++l) {
      for (int n = 4; n <= opts.max_n; ++n) {
        for (int i = 4; i <= n; ++i) {
          int count = 0;
          for (GridPoint p : Region::strip(n, i - 4, i).vertices())
            if (fn(h, 0, p) == l) ++count;
          if (count != i)
            return {false, "strip counts",
                    std::string(1, coloring_name(h)) + " l=" + std::to_string(l) +
                        " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                        ": got " + std::to_string(count)};
        }
      }
    }
  }
  return {};
}

PropertyCheck run_property_suite(const PropertyOptions& opts) {
  for (auto* check : {&check_proper_coloring, &check_perfect_domination,
                      &check_periodicity, &check_translation_identity,
                      &check_strip_counts}) {
    PropertyCheck result = (*check)(opts);
    if (!result.ok) return result;
  }
  return {};
}

}  // namespace tokendom
