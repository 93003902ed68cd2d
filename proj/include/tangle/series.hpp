#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tangle {

// Truncated bivariate power series with exact rational coefficients:
// coeff(n, k) is the coefficient of x^n q^k, for 0 <= n, k <= max_degree.
struct SeriesTable {
    int max_degree = 0;
    std::vector<std::vector<mpq_class>> coeff;

    explicit SeriesTable(int n = 0)
        : max_degree(n), coeff(n + 1, std::vector<mpq_class>(n + 1, 0)) {}

    const mpq_class& get(int n, int k) const { return coeff[n][k]; }
    void set(int n, int k, const mpq_class& v) { coeff[n][k] = v; }
    bool operator==(const SeriesTable&) const = default;
};

// H(x): irreducible planar tanglegrams by size, with coefficient 1/2 at x^2.
// Coefficients above size 2 come from the census (the k = 1 column).
SeriesTable irreducible_series(int n, int threads = 1);

// H built from explicitly supplied coefficients (e.g. literature data read
// from an override file); entries are (size, value) pairs.
SeriesTable series_from_coefficients(int n, const std::vector<std::pair<int, mpq_class>>& h);

// Override file: lines of "n value" where value is an integer or "p/q".
SeriesTable read_h_file(const std::string& path, int n);

// The unique power-series solution of F = x + q H(F) + q F(x^2, q^2) / 2,
// truncated at degree n, computed by fixed-point iteration. All final
// coefficients must be integers (they count objects); otherwise throws.
SeriesTable solve_F(int n, const SeriesTable& h);

// Same series via the rearranged relation
// F = x + q (H(F) - F^2/2) + q (F^2 + F(x^2, q^2)) / 2; used to cross-check.
SeriesTable solve_F_alt(int n, const SeriesTable& h);

}  // namespace tangle
