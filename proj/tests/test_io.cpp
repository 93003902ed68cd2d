#include <array>
#include <cstdio>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "tangle/errors.hpp"
#include "tangle/io.hpp"
#include "tangle/render.hpp"
#include "tangle/untangle.hpp"

using namespace tangle;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(TGL_BIN) + " " + args + " 2>&1";
    std::array<char, 256> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

std::string data_file(const std::string& name) { return std::string(TGL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("tanglegram files round-trip") {
    std::istringstream in(
        "# the five-leaf example\n"
        "T = (((1,2),3),(4,5))\n"
        "S = (((1,(2,3)),4),5)\n"
        "phi = 4 2 5 1 3\n");
    Tanglegram tg = read_tanglegram(in);
    CHECK(tg.phi(1) == 4);
    CHECK(tg.phi(5) == 3);
    std::istringstream again(write_tanglegram(tg));
    Tanglegram back = read_tanglegram(again);
    CHECK(back.t().to_string() == tg.t().to_string());
    CHECK(back.s().to_string() == tg.s().to_string());
    for (Label l : tg.t_labels()) CHECK(back.phi(l) == tg.phi(l));
}

TEST_CASE("parse errors carry line and token") {
    std::istringstream bad(
        "T = (((1,2),3),(4,5))\n"
        "S = (((1,(2,3)),4),5)\n"
        "phi = 4 2 x 1 3\n");
    try {
        read_tanglegram(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.token() == "x");
    }
    std::istringstream missing("T = (1,2)\n");
    CHECK_THROWS_AS(read_tanglegram(missing), ParseError);
}

TEST_CASE("layout files round-trip") {
    std::istringstream in("X = 3 1 2 5 4\nY = 5 4 2 3 1\n");
    Layout ly = read_layout(in);
    CHECK(ly.x_order == std::vector<Label>{3, 1, 2, 5, 4});
    std::istringstream again(write_layout(ly));
    CHECK(read_layout(again) == ly);
}

TEST_CASE("generated tanglegrams survive serialization") {
    std::mt19937 rng(67);
    for (int round = 0; round < 30; ++round) {
        Tanglegram tg = fixtures::random_tanglegram(2 + static_cast<int>(rng() % 8), rng);
        std::istringstream in(write_tanglegram(tg));
        Tanglegram back = read_tanglegram(in);
        CHECK(back.t().to_string() == tg.t().to_string());
        CHECK(back.s().to_string() == tg.s().to_string());
        for (Label l : tg.t_labels()) CHECK(back.phi(l) == tg.phi(l));
    }
}

TEST_CASE("svg rendering") {
    Tanglegram tg = fixtures::five_leaf_example();

    // a planar layout renders with zero crossings per the counter
    Layout planar = modified_untangle(tg).layout;
    std::string svg = render_svg(tg, planar);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    size_t dashed = 0;
    for (size_t at = svg.find("stroke-dasharray"); at != std::string::npos;
         at = svg.find("stroke-dasharray", at + 1))
        ++dashed;
    CHECK(dashed == 5);  // one dashed segment per matched pair
    CHECK(count_crossings(tg, planar).value == 0);

    // the identity layout renders fine too; its six crossings are a property
    // of the data, not the geometry
    Layout identity{tg.t_labels(), tg.s_labels()};
    CHECK(render_svg(tg, identity).find("</svg>") != std::string::npos);
    CHECK(count_crossings(tg, identity).value == 6);

    Tanglegram one = Tanglegram::from_phi_row(Tree::parse("1"), Tree::parse("1"), {1});
    std::string tiny = render_svg(one, Layout{{1}, {1}});
    CHECK(tiny.find("stroke-dasharray") != std::string::npos);

    CHECK_THROWS_AS(render_svg(tg, planar, RenderSpec{-1.0, 10.0, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(render_svg(tg, Layout{{1, 3, 2, 4, 5}, {1, 2, 3, 4, 5}}),
                    std::invalid_argument);
}

TEST_CASE("command line surface") {
    int code = 0;

    std::string planar = run_cli("check-planar " + data_file("ex_five.tgl"), &code);
    CHECK(planar == "planar\n");
    CHECK(code == 0);

    std::string not_planar = run_cli("check-planar " + data_file("gap6.tgl"), &code);
    CHECK(not_planar == "not planar\n");
    CHECK(code == 0);

    std::string inserted = run_cli("insert --remove 2 " + data_file("gap6.tgl"), &code);
    CHECK(code == 0);
    CHECK(inserted.find("crossings: 3") != std::string::npos);

    // the reported count matches a recount of the emitted lists
    {
        std::istringstream lines(inserted);
        Tanglegram tg = read_tanglegram_file(data_file("gap6.tgl"));
        Layout ly = read_layout(lines);
        CHECK(count_crossings(tg, ly).value == 3);
    }

    std::string census_out = run_cli("census --size 4", &code);
    CHECK(code == 0);
    CHECK(census_out == "4,1,5\n4,2,4\n4,3,2\n");

    run_cli("insert --remove 1 " + data_file("gap6.tgl"), &code);
    CHECK(code == 3);  // non-planar residual

    run_cli("check-planar " + data_file("broken.tgl"), &code);
    CHECK(code == 2);  // malformed input

    std::string untangled = run_cli("untangle " + data_file("ex_five.tgl"), &code);
    CHECK(code == 0);
    CHECK(untangled.find("crossings: 0") != std::string::npos);

    std::string svg = run_cli("render " + data_file("ex_five.tgl"), &code);
    CHECK(code == 0);
    CHECK(svg.find("<svg") != std::string::npos);

    std::string series_out = run_cli("series --max-degree 4", &code);
    CHECK(code == 0);
    CHECK(series_out.find("4,3,2") != std::string::npos);

    std::string multi_out =
        run_cli("multi-insert --keep 1 --keep 3 --keep 4 " + data_file("gap6.tgl"), &code);
    CHECK(code == 0);
    CHECK(multi_out.find("crossings:") != std::string::npos);

    std::string graph_out = run_cli("flip-graph " + data_file("ex_five.tgl"), &code);
    CHECK(code == 0);
    CHECK(graph_out.find("node 0:") != std::string::npos);
}
