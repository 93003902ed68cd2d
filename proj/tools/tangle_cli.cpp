#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tangle/enumeration.hpp"
#include "tangle/errors.hpp"
#include "tangle/insertion.hpp"
#include "tangle/io.hpp"
#include "tangle/multi.hpp"
#include "tangle/oracle.hpp"
#include "tangle/planarset.hpp"
#include "tangle/render.hpp"
#include "tangle/series.hpp"
#include "tangle/untangle.hpp"

namespace {

using namespace tangle;

void print_layout_with_count(const Tanglegram& tg, const Layout& ly) {
    std::cout << write_layout(ly);
    std::cout << "crossings: " << count_crossings(tg, ly).value << "\n";
}

IndexSet parse_keep(const std::vector<int>& labels) {
    std::vector<Label> v(labels.begin(), labels.end());
    return IndexSet::of(std::move(v));
}

// greedily grown planar subset used by the non-exact crossing-number bound
IndexSet greedy_planar_subset(const Tanglegram& tg) {
    std::vector<Label> members;
    for (Label l : tg.t_labels()) {
        members.push_back(l);
        IndexSet probe = IndexSet::of(members);
        if (members.size() >= 2 && !is_planar(induced_subtanglegram(tg, probe)))
            members.pop_back();
    }
    return IndexSet::of(members);
}

int run(int argc, char** argv) {
    CLI::App app{"tanglegram layout toolkit"};
    app.require_subcommand(1);

    std::string file, layout_file, out_file, h_file;
    int remove_label = 0;
    std::vector<int> keep_labels;
    int size_n = 0, max_degree = 0, threads = 1;
    bool exact = false;
    double unit = 24.0, depth_px = 28.0;

    auto* planar = app.add_subcommand("check-planar", "report whether the tanglegram is planar");
    planar->add_option("file", file)->required();

    auto* untangle_cmd = app.add_subcommand("untangle", "one planar layout via ModifiedUntangle");
    untangle_cmd->add_option("file", file)->required();

    auto* layouts_cmd = app.add_subcommand("layouts", "all planar layouts");
    layouts_cmd->add_option("file", file)->required();

    auto* graph_cmd = app.add_subcommand("flip-graph", "flip graph of the planar layouts");
    graph_cmd->add_option("file", file)->required();

    auto* insert_cmd = app.add_subcommand("insert", "optimal single edge insertion");
    insert_cmd->add_option("--remove", remove_label, "label of the edge to reinsert")->required();
    insert_cmd->add_option("file", file)->required();

    auto* iter_cmd = app.add_subcommand("iterated-insert", "IteratedInsertion heuristic");
    iter_cmd->add_option("--keep", keep_labels, "labels of the planar subtanglegram")->required();
    iter_cmd->add_option("file", file)->required();

    auto* multi_cmd = app.add_subcommand("multi-insert", "exact multiple edge insertion");
    multi_cmd->add_option("--keep", keep_labels, "labels of the planar subtanglegram")->required();
    multi_cmd->add_option("file", file)->required();

    auto* cross_cmd = app.add_subcommand("crossing-number", "crossing number (exact or bound)");
    cross_cmd->add_flag("--exact", exact, "exhaustive oracle instead of the insertion bound");
    cross_cmd->add_option("file", file)->required();

    auto* census_cmd = app.add_subcommand("census", "planar tanglegrams by leaf-matched pairs");
    census_cmd->add_option("--size", size_n, "tanglegram size")->required();
    census_cmd->add_option("--threads", threads, "worker threads");

    auto* series_cmd = app.add_subcommand("series", "coefficients of F(x,q)");
    series_cmd->add_option("--max-degree", max_degree, "truncation degree")->required();
    series_cmd->add_option("--h-file", h_file, "override coefficients of H(x)");
    series_cmd->add_option("--threads", threads, "worker threads");

    auto* render_cmd = app.add_subcommand("render", "SVG drawing of a layout");
    render_cmd->add_option("--layout", layout_file, "layout file (defaults to untangle output)");
    render_cmd->add_option("--unit", unit, "vertical pixels per leaf");
    render_cmd->add_option("--depth-px", depth_px, "horizontal pixels per tree level");
    render_cmd->add_option("--out", out_file, "output path (defaults to stdout)");
    render_cmd->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    if (planar->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        std::cout << (is_planar(tg) ? "planar" : "not planar") << "\n";
    } else if (untangle_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        UntangleResult res = modified_untangle(tg);
        print_layout_with_count(tg, res.layout);
    } else if (layouts_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        std::vector<Layout> all = all_planar_layouts(tg);
        for (const Layout& ly : all) print_layout_with_count(tg, ly);
        std::cout << "count: " << all.size() << "\n";
    } else if (graph_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        std::cout << flip_graph(tg).to_text();
    } else if (insert_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        Layout ly = insert_edge(tg, remove_label);
        print_layout_with_count(tg, ly);
    } else if (iter_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        Layout ly = iterated_insertion(tg, parse_keep(keep_labels));
        print_layout_with_count(tg, ly);
    } else if (multi_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        MultiResult res = multi_insertion(tg, parse_keep(keep_labels));
        print_layout_with_count(tg, res.layout);
    } else if (cross_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        if (exact) {
            OracleReport rep = brute_crossing_number(tg);
            std::cout << write_layout(rep.witness);
            std::cout << "crossings: " << rep.optimum.value << "\n";
        } else {
            IndexSet keep = greedy_planar_subset(tg);
            Layout ly = iterated_insertion(tg, keep);
            std::cout << "# upper bound via iterated insertion; use --exact for the oracle\n";
            print_layout_with_count(tg, ly);
        }
    } else if (census_cmd->parsed()) {
        CensusRow row = census(size_n, threads);
        for (const auto& [k, count] : row.counts)
            std::cout << row.n << "," << k << "," << count << "\n";
    } else if (series_cmd->parsed()) {
        SeriesTable h = h_file.empty() ? irreducible_series(max_degree, threads)
                                       : read_h_file(h_file, max_degree);
        SeriesTable f = solve_F(max_degree, h);
        for (int n = 2; n <= max_degree; ++n)
            for (int k = 1; k <= max_degree; ++k)
                if (f.get(n, k) != 0) std::cout << n << "," << k << "," << f.get(n, k) << "\n";
    } else if (render_cmd->parsed()) {
        Tanglegram tg = read_tanglegram_file(file);
        Layout ly =
            layout_file.empty() ? modified_untangle(tg).layout : read_layout_file(layout_file);
        RenderSpec spec;
        spec.unit = unit;
        spec.tree_depth_px = depth_px;
        std::string svg = render_svg(tg, ly, spec);
        if (out_file.empty()) {
            std::cout << svg;
        } else {
            std::ofstream out(out_file);
            out << svg;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tangle::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const tangle::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const tangle::SizeGuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
