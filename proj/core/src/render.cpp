#include "tokendom/render.hpp"

#include <stdexcept>

#include "tokendom/construction.hpp"

namespace tokendom {

namespace {

constexpr int kCell = 20;

void require_layer_domain(int n, RenderLayer layer) {
  const int min_n =
      (layer == RenderLayer::Patches || layer == RenderLayer::Final) ? 20 : 4;
  if (n < min_n)
    throw std::invalid_argument(std::string("layer ") + layer_name(layer) +
                                " needs n >= " + std::to_string(min_n));
}

std::vector<GridPoint> class_points(int n) {
  const CaseSelection sel = select_case(n);
  return color_class(Region::staircase(n), {sel.h, 0, sel.color});
}

std::vector<GridPoint> base_points(int n) {
  const CaseSelection sel = select_case(n);
  return base_dominating_set(sel.h, sel.color, n);
}

// glyphs indexed by [j][i] over the canvas j in 0..n, i in 0..n+1
std::vector<std::string> blank_canvas(int n) {
  return std::vector<std::string>(n + 1, std::string(n + 2, '.'));
}

void stamp(std::vector<std::string>& canvas, const std::vector<GridPoint>& pts,
           char glyph) {
  for (GridPoint p : pts) canvas[p.j][p.i] = glyph;
}

void append_canvas(std::string& out, const std::vector<std::string>& canvas,
                   int n) {
  for (int j = n; j >= 0; --j) {
    const std::string& row = canvas[j];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += row[i];
    }
    out += '\n';
  }
}

}  // namespace

const char* layer_name(RenderLayer layer) {
  switch (layer) {
    case RenderLayer::ColorClass: return "color_class";
    case RenderLayer::DPrime: return "d_prime";
    case RenderLayer::Patches: return "patches";
    default: return "final";
  }
}

RenderLayer layer_from_name(const std::string& name) {
  if (name == "color_class") return RenderLayer::ColorClass;
  if (name == "d_prime") return RenderLayer::DPrime;
  if (name == "patches") return RenderLayer::Patches;
  if (name == "final") return RenderLayer::Final;
  throw std::invalid_argument("unknown layer: " + name);
}

std::string render_ascii(int n, const std::vector<RenderLayer>& layers) {
  if (n < 2) throw std::invalid_argument("render_ascii: n must be >= 2");
  std::string out;
  if (layers.empty()) {
    append_canvas(out, blank_canvas(n), n);
    return out;
  }
  for (std::size_t k = 0; k < layers.size(); ++k) {
    require_layer_domain(n, layers[k]);
    if (k) out += '\n';
    out += std::string("# layer: ") + layer_name(layers[k]) + '\n';
    auto canvas = blank_canvas(n);
    switch (layers[k]) {
      case RenderLayer::ColorClass:
        stamp(canvas, class_points(n), 'C');
        break;
      case RenderLayer::DPrime:
        stamp(canvas, base_points(n), 'D');
        break;
      case RenderLayer::Patches: {
        const CornerPatches patches = corner_patches(n);
        stamp(canvas, patches.remove, 'A');
        stamp(canvas, patches.add, 'B');
        break;
      }
      case RenderLayer::Final:
        stamp(canvas, construct_dominating_set(n).grid_set, 'D');
        break;
    }
    append_canvas(out, canvas, n);
  }
  return out;
}

std::string render_svg(int n, const std::vector<RenderLayer>& layers) {
  if (n < 2) throw std::invalid_argument("render_svg: n must be >= 2");
  for (RenderLayer layer : layers) require_layer_domain(n, layer);

  const int width = (n + 2) * kCell;
  const int height = (n + 1) * kCell;
  auto cx = [&](GridPoint p) { return p.i * kCell + kCell / 2; };
  auto cy = [&](GridPoint p) { return (n - p.j) * kCell + kCell / 2; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" +
                    std::to_string(height) + "\">\n";
  auto circle = [&](GridPoint p, const char* style) {
    out += "  <circle cx=\"" + std::to_string(cx(p)) + "\" cy=\"" +
           std::to_string(cy(p)) + "\" " + style + "/>\n";
  };
  auto square = [&](GridPoint p, const char* stroke) {
    out += "  <rect x=\"" + std::to_string(p.i * kCell + 2) + "\" y=\"" +
           std::to_string((n - p.j) * kCell + 2) + "\" width=\"" +
           std::to_string(kCell - 4) + "\" height=\"" +
           std::to_string(kCell - 4) + "\" fill=\"none\" stroke=\"" + stroke +
           "\" stroke-width=\"2\"/>\n";
  };

  for (RenderLayer layer : layers) {
    switch (layer) {
      case RenderLayer::ColorClass:
        for (GridPoint p : class_points(n))
          circle(p, "r=\"7\" fill=\"none\" stroke=\"black\"");
        break;
      case RenderLayer::DPrime:
        for (GridPoint p : base_points(n))
          circle(p, "r=\"5\" fill=\"dimgray\"");
        break;
      case RenderLayer::Patches: {
        const CornerPatches patches = corner_patches(n);
        for (GridPoint p : patches.remove) square(p, "red");
        for (GridPoint p : patches.add) square(p, "green");
        break;
      }
      case RenderLayer::Final:
        for (GridPoint p : construct_dominating_set(n).grid_set)
          circle(p, "r=\"5\" fill=\"black\"");
        break;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tokendom
