#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <tokendom/render.hpp>

using namespace tokendom;

namespace {

std::size_t glyphs(const std::string& text, char c) {
  return std::count(text.begin(), text.end(), c);
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("layer names round-trip") {
  for (auto l : {RenderLayer::ColorClass, RenderLayer::DPrime,
                 RenderLayer::Patches, RenderLayer::Final})
    CHECK(layer_from_name(layer_name(l)) == l);
  CHECK_THROWS_AS(layer_from_name("edges"), std::invalid_argument);
}

TEST_CASE("empty layer list draws a bare dot grid") {
  const std::string text = render_ascii(3, {});
  CHECK(text.find('#') == std::string::npos);
  CHECK(glyphs(text, '.') == 20);  // (n+1) x (n+2) canvas cells
  CHECK(text.back() == '\n');
}

TEST_CASE("ascii glyph counts equal layer cardinalities") {
  const std::string text =
      render_ascii(20, {RenderLayer::Final, RenderLayer::Patches});
  CHECK(glyphs(text, 'D') == 47);
  CHECK(glyphs(text, 'A') == 6);
  CHECK(glyphs(text, 'B') == 4);
  CHECK(text.find("# layer: final") != std::string::npos);
  CHECK(text.find("# layer: patches") != std::string::npos);
}

TEST_CASE("color class layer counts class points") {
  const std::string text = render_ascii(20, {RenderLayer::ColorClass});
  CHECK(glyphs(text, 'C') == 50);
  const std::string base = render_ascii(20, {RenderLayer::DPrime});
  CHECK(glyphs(base, 'D') == 49);
}

TEST_CASE("rendering is deterministic") {
  const auto layers = std::vector<RenderLayer>{RenderLayer::Final};
  CHECK(render_ascii(23, layers) == render_ascii(23, layers));
  CHECK(render_svg(23, layers) == render_svg(23, layers));
}

TEST_CASE("layer guards by minimum n") {
  CHECK_THROWS_AS(render_ascii(15, {RenderLayer::Patches}),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_ascii(15, {RenderLayer::Final}),
                  std::invalid_argument);
  CHECK_NOTHROW(render_ascii(15, {RenderLayer::ColorClass}));
  CHECK_THROWS_AS(render_ascii(1, {}), std::invalid_argument);
}

TEST_CASE("svg output is self-contained") {
  const std::string svg =
      render_svg(20, {RenderLayer::Final, RenderLayer::Patches});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("rect") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
}

}  // TEST_SUITE
