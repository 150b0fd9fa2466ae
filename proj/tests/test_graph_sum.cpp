#include <doctest.h>

#include "mvt/combinatorics.hpp"
#include "mvt/graph_sum.hpp"
#include "mvt/virasoro.hpp"

using namespace mvt;

TEST_CASE("single values through the graph sum") {
    Session s;
    // (1,1): single-vertex term gives L^2/48, the loop gives zeta(2)/2
    CHECK(mv_coeff_via_graphs(s, 1, 1, {0}) == PiPoly::term(Rational(1, 12), 1));
    CHECK(mv_coeff_via_graphs(s, 1, 1, {1}) == PiPoly(Rational(1, 8)));
    // (0,4) constant term: three one-edge graphs, 3 u_{0,0} F_{0,3}^2 = pi^2/2
    CHECK(mv_coeff_via_graphs(s, 0, 4, {0, 0, 0, 0}) == PiPoly::term(Rational(1, 2), 1));
    // (2,1) constant term from the table
    CHECK(mv_coeff_via_graphs(s, 2, 1, {0}) == PiPoly::term(Rational(29, 2560), 4));
}

TEST_CASE("dual-method equality") {
    Session s;
    for (auto [g, n] : {std::pair{0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        CHECK(mv_polynomial_via_graphs(s, g, n) == s.mv_polynomial(g, n));
    }
}

TEST_CASE("closed-surface graph sums") {
    Session s;
    // n = 0 sums are supported; (2,0) must reproduce F_{2,1}[1]/6
    PiPoly v20 = mv_polynomial_via_graphs(s, 2, 0).coeff({});
    CHECK(v20 == PiPoly::term(Rational(1, 192), 3));
    CHECK(v20 == s.mv_constant_term(2, 0));
}

TEST_CASE("leading coefficients") {
    Session s;
    // H*_n[0] = (2n-5)!/(2^(n-3) (n-3)!)
    for (int n = 4; n <= 6; ++n) {
        Rational expect(factorial(2 * n - 5), Integer(pow2(n - 3) * factorial(n - 3)));
        CHECK(leading_coefficient(s, 0, n, 0) == PiPoly(expect));
    }
    // H*_5[1] = 3 pi^2
    CHECK(leading_coefficient(s, 0, 5, 1) == PiPoly::term(Rational(3), 1));
    // H*_{1,n}[0] = (1/24) (2n+1)!/(2^n n!)
    for (int n = 1; n <= 4; ++n) {
        Rational expect(factorial(2 * n + 1), Integer(24 * pow2(n) * factorial(n)));
        CHECK(leading_coefficient(s, 1, n, 0) == PiPoly(expect));
    }

    // general consistency with the one-row values from the recursion
    for (auto [g, n] : {std::pair{0, 5}, {0, 6}, {1, 2}, {1, 3}, {2, 1}}) {
        int dim = dimension(g, n);
        for (int d = 0; d <= std::min(dim, 3); ++d) {
            CAPTURE(g);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(leading_coefficient(s, g, n, d) == s.h_row(g, n, dim - d));
        }
    }
}

TEST_CASE("edge restriction is sharp at codimension") {
    Session s;
    // graphs with more than d edges cannot contribute at codimension d
    int g = 1, n = 2, dim = dimension(g, n);
    for (int d = 0; d <= dim; ++d) {
        std::vector<int> idx(static_cast<size_t>(n), 0);
        idx[0] = dim - d;
        CHECK(mv_coeff_via_graphs(s, g, n, idx, d) == mv_coeff_via_graphs(s, g, n, idx));
    }
}
