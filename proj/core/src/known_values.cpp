#include "tokendom/known_values.hpp"

#include <array>

namespace tokendom {

namespace {

constexpr std::array<int, 24> kGamma = {1,  1,  2,  3,  5,  6,  8,  10,
                                        12, 15, 18, 20, 23, 27, 30, 34,
                                        38, 42, 47, 51, 56, 61, 66, 72};

constexpr std::array<int, 22> kConstructionSize = {0,  2,  3,  5,  7,  9,  12, 14,
                                                   17, 20, 23, 27, 30, 34, 38, 42,
                                                   47, 51, 56, 61, 66, 72};

}  // namespace

std::optional<int> known_gamma(int n) {
  if (n < 2 || n > 25) return std::nullopt;
  return kGamma[n - 2];
}

std::optional<int> known_d(int n) {
  if (n < 4 || n > 25) return std::nullopt;
  return kConstructionSize[n - 4];
}

}  // namespace tokendom
