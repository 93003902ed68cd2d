#include "tangle/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tangle {

namespace {

struct Coords {
    std::vector<double> x, y;  // per vertex id
    int levels = 0;
};

// leaves on one column, internal vertices offset by height above the leaves
Coords place(const Tree& tree, const std::vector<Label>& order, const RenderSpec& spec,
             bool left_side, double leaf_x) {
    Coords c;
    c.x.assign(tree.vertex_count(), 0);
    c.y.assign(tree.vertex_count(), 0);
    std::map<Label, int> rank;
    for (int p = 0; p < static_cast<int>(order.size()); ++p) rank[order[p]] = p;

    std::function<int(VertexId)> height = [&](VertexId v) -> int {
        if (tree.is_leaf(v)) {
            c.y[v] = rank.at(tree.leaf_label(v)) * spec.unit;
            c.x[v] = leaf_x;
            return 0;
        }
        int h = 1 + std::max(height(tree.left(v)), height(tree.right(v)));
        c.y[v] = (c.y[tree.left(v)] + c.y[tree.right(v)]) / 2.0;
        c.x[v] = leaf_x + (left_side ? -1.0 : 1.0) * h * spec.tree_depth_px;
        c.levels = std::max(c.levels, h);
        return h;
    };
    height(tree.root());
    return c;
}

std::string num(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

std::string render_svg(const Tanglegram& tg, const Layout& ly, const RenderSpec& spec) {
    if (spec.unit <= 0 || spec.tree_depth_px <= 0)
        throw std::invalid_argument("render dimensions must be positive");
    if (!is_tree_consistent(tg, ly))
        throw std::invalid_argument("layout is not valid for the tanglegram");

    int n = tg.size();
    double gap = std::max(4.0 * spec.unit, 80.0);
    // provisional leaf columns; shifted after we know the tree depths
    Coords ct = place(tg.t(), ly.x_order, spec, /*left_side=*/true, 0.0);
    Coords cs = place(tg.s(), ly.y_order, spec, /*left_side=*/false, gap);
    double margin = 10.0 + 6.0 * spec.unit / 24.0;
    double x_shift = margin + ct.levels * spec.tree_depth_px;
    double y_shift = margin;
    double width = x_shift + gap + cs.levels * spec.tree_depth_px + margin + 20.0;
    double height = 2 * margin + (n - 1) * spec.unit;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\">\n";

    auto line = [&](double x1, double y1, double x2, double y2, bool dashed) {
        svg << "  <line x1=\"" << num(x1 + x_shift) << "\" y1=\"" << num(y1 + y_shift)
            << "\" x2=\"" << num(x2 + x_shift) << "\" y2=\"" << num(y2 + y_shift)
            << "\" stroke=\"black\" stroke-width=\"1\"";
        if (dashed) svg << " stroke-dasharray=\"4 3\"";
        svg << "/>\n";
    };
    auto dot = [&](double x, double y) {
        svg << "  <circle cx=\"" << num(x + x_shift) << "\" cy=\"" << num(y + y_shift)
            << "\" r=\"2\" fill=\"black\"/>\n";
    };
    auto text = [&](double x, double y, const std::string& s, bool left_side) {
        svg << "  <text x=\"" << num(x + x_shift + (left_side ? -4.0 : 4.0)) << "\" y=\""
            << num(y + y_shift + 3.5) << "\" font-size=\"10\" text-anchor=\""
            << (left_side ? "end" : "start") << "\">" << s << "</text>\n";
    };

    // between-tree edges first so the trees draw over them
    detail::PositionIndex idx;
    idx.build(tg, ly.x_order, ly.y_order);
    for (Label i : tg.t_labels())
        line(0.0, idx.x_pos_of[i] * spec.unit, gap, idx.y_pos_of[tg.phi(i)] * spec.unit,
             spec.dashed_matching);

    auto draw_tree = [&](const Tree& tree, const Coords& c, bool left_side) {
        for (VertexId v = 0; v < tree.vertex_count(); ++v) {
            dot(c.x[v], c.y[v]);
            if (!tree.is_leaf(v)) {
                line(c.x[v], c.y[v], c.x[tree.left(v)], c.y[tree.left(v)], false);
                line(c.x[v], c.y[v], c.x[tree.right(v)], c.y[tree.right(v)], false);
            } else {
                text(c.x[v], c.y[v], std::to_string(tree.leaf_label(v)), left_side);
            }
        }
    };
    draw_tree(tg.t(), ct, true);
    draw_tree(tg.s(), cs, false);

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tangle
