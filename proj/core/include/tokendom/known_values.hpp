#pragma once

#include <optional>

namespace tokendom {

// published minimum dominating set sizes for two-token path graphs, n = 2..25
std::optional<int> known_gamma(int n);

// published construction sizes, n = 4..25 (matches gamma for n >= 15)
std::optional<int> known_d(int n);

}  // namespace tokendom
