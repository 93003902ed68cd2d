#pragma once

#include <string>

#include "tangle/layout.hpp"
#include "tangle/tanglegram.hpp"

namespace tangle {

// Drawing parameters: leaves are `unit` pixels apart vertically, tree levels
// `tree_depth_px` apart horizontally; between-tree edges are dashed when
// `dashed_matching` is set (tree edges are always solid).
struct RenderSpec {
    double unit = 24.0;
    double tree_depth_px = 28.0;
    bool dashed_matching = true;
};

// SVG 1.1 document: T drawn on the left with leaves top-to-bottom per
// x_order, S mirrored on the right per y_order, internal vertices at the
// midpoint of their children's vertical span.
std::string render_svg(const Tanglegram& tg, const Layout& ly, const RenderSpec& spec = {});

}  // namespace tangle
