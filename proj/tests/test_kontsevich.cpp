#include <doctest.h>

#include <functional>
#include <random>

#include "mvt/combinatorics.hpp"
#include "mvt/genus_one.hpp"
#include "mvt/virasoro.hpp"

using namespace mvt;

TEST_CASE("normalization values") {
    Session s;
    CHECK(s.psi_intersection(0, {0, 0, 0}) == Rational(1));
    CHECK(s.psi_intersection(1, {1}) == Rational(1, 24));
    CHECK(s.psi_intersection(1, {2, 1, 0}) == Rational(1, 12));
    CHECK(s.psi_intersection(0, {2, 0, 0}) == Rational(0));  // off-dimension
    CHECK(s.psi_intersection(0, {1, 0, 0, 0}) == Rational(1));
    CHECK(s.psi_intersection(0, {1, 1, 0, 0, 0}) == Rational(2));
    CHECK(s.psi_intersection(2, {4}) == Rational(1, 1152));
    CHECK(s.psi_intersection(2, {3, 2}) == Rational(29, 5760));
    CHECK(s.psi_intersection(2, {4, 1}) == Rational(1, 384));
    CHECK_THROWS_WITH(s.psi_intersection(0, {0, 0}), "unstable type");
}

TEST_CASE("kontsevich coefficients") {
    Session s;
    CHECK(s.kontsevich_coeff(1, 1, {1}) == Rational(1, 8));
    CHECK(s.kontsevich_coeff(0, 4, {1, 0, 0, 0}) == Rational(3));
    CHECK(s.kontsevich_coeff(1, 2, {1, 1}) == Rational(3, 8));
    // off-dimension indices vanish
    CHECK(s.kontsevich_coeff(1, 2, {1, 0}).is_zero());
}

TEST_CASE("genus-zero closed formula as oracle") {
    // <tau_{d_1}...tau_{d_n}>_0 = (n-3)! / prod d_i!  when sum d = n-3
    Session s;
    std::vector<int> d;
    std::function<void(int, int, int)> rec = [&](int slots, int budget, int maxv) {
        if (slots == 0) {
            if (budget != 0) return;
            int n = static_cast<int>(d.size());
            Rational expect(factorial(n - 3));
            for (int x : d) expect /= Rational(factorial(x));
            CHECK(s.psi_intersection(0, d) == expect);
            return;
        }
        for (int v = std::min(budget, maxv); v >= 0; --v) {
            d.push_back(v);
            rec(slots - 1, budget - v, v);
            d.pop_back();
        }
    };
    for (int n = 3; n <= 8; ++n) {
        d.clear();
        rec(n, n - 3, n - 3);
    }
}

TEST_CASE("genus-one closed formula equals the recursion") {
    Session s;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> a(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n - 1) {
                a[static_cast<size_t>(i)] = left;
                CHECK(genus_one_closed(a) == s.psi_intersection(1, a));
                return;
            }
            for (int v = 0; v <= left; ++v) {
                a[static_cast<size_t>(i)] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, n);
    }
    // hand-checked special values
    CHECK(genus_one_closed({1}) == Rational(1, 24));
    CHECK(genus_one_closed({2, 0}) == Rational(1, 24));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> top(static_cast<size_t>(n), 0);
        top[0] = n;
        CHECK(genus_one_closed(top) == Rational(1, 24));  // <psi_1^n>
        if (n >= 2) {
            std::vector<int> mixed(static_cast<size_t>(n), 0);
            mixed[0] = n - 1;
            mixed[1] = 1;
            CHECK(genus_one_closed(mixed) == Rational(n - 1, 24));
        }
        CHECK(genus_one_closed(std::vector<int>(static_cast<size_t>(n), 0)).is_zero());
    }
}

TEST_CASE("genus-one total series") {
    Session s;
    CHECK(genus_one_total(1) == Rational(1, 24));
    CHECK(genus_one_total(2) == Rational(1, 8));
    CHECK(genus_one_total(3) == Rational(17, 24));
    // equals the sum over all compositions of n
    for (int n = 1; n <= 6; ++n) {
        Rational acc;
        std::vector<int> a(static_cast<size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n - 1) {
                a[static_cast<size_t>(i)] = left;
                acc += s.psi_intersection(1, a);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                a[static_cast<size_t>(i)] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, n);
        CHECK(genus_one_total(n) == acc);
    }
}

TEST_CASE("string and dilaton equations on random indices") {
    Session s;
    std::mt19937 rng(424243);
    int tested = 0;
    while (tested < 100) {
        int g = static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 6);
        if (!is_stable(g, n) || dimension(g, n) > 8) continue;
        ++tested;
        std::vector<int> d(static_cast<size_t>(n), 0);
        for (int k = 0; k < dimension(g, n); ++k) d[rng() % static_cast<unsigned>(n)] += 1;

        std::vector<int> with0 = d;
        with0.push_back(0);
        Rational rhs;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0) continue;
            std::vector<int> lowered = d;
            lowered[i] -= 1;
            rhs += s.psi_intersection(g, lowered);
        }
        CHECK(s.psi_intersection(g, with0) == rhs);

        std::vector<int> with1 = d;
        with1.push_back(1);
        CHECK(s.psi_intersection(g, with1) == Rational(2 * g - 2 + n) * s.psi_intersection(g, d));
    }
}

TEST_CASE("recursion is symmetric in the reduction slot") {
    Session s;
    auto& engine = s.kontsevich();
    for (auto [g, n, d] : std::vector<std::tuple<int, int, std::vector<int>>>{
             {0, 5, {2, 0, 0, 0, 0}},
             {1, 2, {1, 1}},
             {1, 3, {2, 1, 0}},
             {2, 1, {4}},
             {2, 2, {3, 2}}}) {
        PiPoly canonical = engine.coeff(g, n, d);
        // reduce on every slot, including zero entries (string-equation path)
        for (size_t pos = 0; pos < d.size(); ++pos)
            CHECK(engine.coeff_reducing_on(g, n, d, pos) == canonical);
    }
}
