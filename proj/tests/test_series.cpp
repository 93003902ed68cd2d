#include <fstream>

#include "doctest.h"
#include "tangle/errors.hpp"
#include "tangle/series.hpp"

using namespace tangle;

TEST_CASE("irreducible coefficients from the census") {
    SeriesTable h = irreducible_series(5);
    CHECK(h.get(2, 0) == mpq_class(1, 2));
    CHECK(h.get(3, 0) == 1);
    CHECK(h.get(4, 0) == 5);
    CHECK(h.get(5, 0) == 34);
}

TEST_CASE("the functional equation reproduces the small census rows") {
    SeriesTable f = solve_F(5, irreducible_series(5));
    long expected[6][6] = {};
    expected[2][1] = 1;
    expected[3][1] = 1;
    expected[3][2] = 1;
    expected[4][1] = 5;
    expected[4][2] = 4;
    expected[4][3] = 2;
    expected[5][1] = 34;
    expected[5][2] = 28;
    expected[5][3] = 11;
    expected[5][4] = 3;
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) CHECK(f.get(n, k) == mpq_class(expected[n][k]));

    // substituting q = 1 gives the plain planar counts
    long totals[6] = {0, 1, 1, 2, 11, 76};
    for (int n = 1; n <= 5; ++n) {
        mpq_class total = 0;
        for (int k = 0; k <= 5; ++k) total += f.get(n, k);
        CHECK(total == mpq_class(totals[n]));
    }
}

TEST_CASE("degree-1 truncation is the single leaf") {
    SeriesTable f = solve_F(1, SeriesTable(1));
    CHECK(f.get(1, 0) == 1);
    for (int k = 1; k <= 1; ++k) CHECK(f.get(1, k) == 0);
}

TEST_CASE("both fixed-point routes agree") {
    SeriesTable h = irreducible_series(5);
    CHECK(solve_F(5, h) == solve_F_alt(5, h));
}

TEST_CASE("an inconsistent H is rejected") {
    SeriesTable h(4);
    h.set(2, 0, 1);  // the half convention is what keeps coefficients integral
    h.set(3, 0, 1);
    h.set(4, 0, 5);
    CHECK_THROWS_AS(solve_F(4, h), PreconditionError);
}

TEST_CASE("override files supply H directly") {
    std::string path = "/tmp/tangle_h_override.txt";
    {
        std::ofstream out(path);
        out << "# literature coefficients\n";
        out << "2 1/2\n3 1\n4 5\n5 34\n";
    }
    SeriesTable h = read_h_file(path, 5);
    CHECK(h.get(2, 0) == mpq_class(1, 2));
    CHECK(h.get(5, 0) == 34);
    CHECK(solve_F(5, h) == solve_F(5, irreducible_series(5)));

    {
        std::ofstream out(path);
        out << "2 nonsense\n";
    }
    CHECK_THROWS_AS(read_h_file(path, 5), ParseError);
}
