#include "tangle/series.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tangle/enumeration.hpp"
#include "tangle/errors.hpp"

namespace tangle {

namespace {

using Poly = SeriesTable;  // reused as a plain truncated polynomial

Poly mul(const Poly& a, const Poly& b) {
    int n = a.max_degree;
    Poly out(n);
    for (int an = 0; an <= n; ++an)
        for (int ak = 0; ak <= n; ++ak) {
            if (a.coeff[an][ak] == 0) continue;
            for (int bn = 0; an + bn <= n; ++bn)
                for (int bk = 0; ak + bk <= n; ++bk) {
                    if (b.coeff[bn][bk] == 0) continue;
                    out.coeff[an + bn][ak + bk] += a.coeff[an][ak] * b.coeff[bn][bk];
                }
        }
    return out;
}

Poly add(Poly a, const Poly& b) {
    for (int n = 0; n <= a.max_degree; ++n)
        for (int k = 0; k <= a.max_degree; ++k) a.coeff[n][k] += b.coeff[n][k];
    return a;
}

Poly scale(Poly a, const mpq_class& c) {
    for (auto& row : a.coeff)
        for (auto& v : row) v *= c;
    return a;
}

Poly shift_q(const Poly& a) {  // multiply by q
    Poly out(a.max_degree);
    for (int n = 0; n <= a.max_degree; ++n)
        for (int k = 0; k + 1 <= a.max_degree; ++k) out.coeff[n][k + 1] = a.coeff[n][k];
    return out;
}

Poly substitute_squares(const Poly& a) {  // F(x^2, q^2)
    Poly out(a.max_degree);
    for (int n = 0; 2 * n <= a.max_degree; ++n)
        for (int k = 0; 2 * k <= a.max_degree; ++k) out.coeff[2 * n][2 * k] = a.coeff[n][k];
    return out;
}

// H(F) for univariate H (coefficients in the k = 0 column, from degree 2 up)
Poly compose(const Poly& h, const Poly& f) {
    int n = f.max_degree;
    Poly out(n), power = mul(f, f);
    for (int m = 2; m <= n; ++m) {
        if (h.coeff[m][0] != 0) out = add(out, scale(power, h.coeff[m][0]));
        if (m < n) power = mul(power, f);
    }
    return out;
}

Poly x_term(int n) {
    Poly p(n);
    p.coeff[1][0] = 1;
    return p;
}

void verify_integral(const Poly& f) {
    for (int n = 0; n <= f.max_degree; ++n)
        for (int k = 0; k <= f.max_degree; ++k) {
            mpq_class v = f.coeff[n][k];
            v.canonicalize();
            if (v.get_den() != 1)
                throw PreconditionError("series solution has a non-integer coefficient at x^" +
                                        std::to_string(n) + " q^" + std::to_string(k) +
                                        "; the supplied H is inconsistent");
        }
}

template <typename Step>
Poly fixed_point(int n, Step&& step) {
    Poly f = x_term(n);
    for (int it = 0; it <= n + 1; ++it) {
        Poly next = step(f);
        if (next == f) break;
        f = std::move(next);
    }
    verify_integral(f);
    return f;
}

}  // namespace

SeriesTable irreducible_series(int n, int threads) {
    SeriesTable h(n);
    if (n >= 2) h.coeff[2][0] = mpq_class(1, 2);
    for (int m = 3; m <= n; ++m) {
        CensusRow row = census(m, threads);
        auto it = row.counts.find(1);
        h.coeff[m][0] = mpq_class(static_cast<long>(it == row.counts.end() ? 0 : it->second));
    }
    return h;
}

SeriesTable series_from_coefficients(int n,
                                     const std::vector<std::pair<int, mpq_class>>& coeffs) {
    SeriesTable h(n);
    for (const auto& [m, v] : coeffs)
        if (m >= 0 && m <= n) h.coeff[m][0] = v;
    return h;
}

SeriesTable read_h_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, path, "cannot open file");
    std::vector<std::pair<int, mpq_class>> coeffs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        int m;
        std::string value;
        if (!(ss >> m)) continue;  // blank line
        if (!(ss >> value)) throw ParseError(line_no, line, "expected 'n value'");
        try {
            mpq_class v(value);
            v.canonicalize();
            coeffs.push_back({m, v});
        } catch (const std::exception&) {
            throw ParseError(line_no, value, "expected an integer or p/q rational");
        }
    }
    return series_from_coefficients(n, coeffs);
}

SeriesTable solve_F(int n, const SeriesTable& h) {
    if (h.max_degree < n) throw std::invalid_argument("H is not supplied up to degree n");
    return fixed_point(n, [&](const Poly& f) {
        Poly rhs = add(shift_q(compose(h, f)),
                       scale(shift_q(substitute_squares(f)), mpq_class(1, 2)));
        return add(std::move(rhs), x_term(n));
    });
}

SeriesTable solve_F_alt(int n, const SeriesTable& h) {
    if (h.max_degree < n) throw std::invalid_argument("H is not supplied up to degree n");
    return fixed_point(n, [&](const Poly& f) {
        Poly f2 = mul(f, f);
        Poly first = add(compose(h, f), scale(f2, mpq_class(-1, 2)));
        Poly second = scale(add(f2, substitute_squares(f)), mpq_class(1, 2));
        return add(add(shift_q(first), shift_q(second)), x_term(n));
    });
}

}  // namespace tangle
