#pragma once

#include <string>
#include <vector>

namespace tokendom {

enum class RenderLayer { ColorClass, DPrime, Patches, Final };

const char* layer_name(RenderLayer layer);
RenderLayer layer_from_name(const std::string& name);  // invalid_argument

// one glyph block per requested layer, in request order, separated by blank
// lines. Rows run from j = n down to 0, columns i = 0..n+1, glyphs space
// separated: '.' empty, 'C' color class, 'D' dominating set, 'A' removed,
// 'B' added. An empty layer list yields a single headerless dot grid.
std::string render_ascii(int n, const std::vector<RenderLayer>& layers);

// all requested layers overlaid on one canvas: circles for the color class
// and dominating sets, red squares for removals, green squares for additions
std::string render_svg(int n, const std::vector<RenderLayer>& layers);

}  // namespace tokendom
