#include <doctest.h>

#include <cmath>
#include <random>

#include "mvt/combinatorics.hpp"
#include "mvt/pi_poly.hpp"
#include "mvt/rational.hpp"
#include "mvt/virasoro.hpp"

using namespace mvt;

TEST_CASE("rational basics") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK((a * Rational(2, 3)).str() == "1");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    std::vector<int> parts{2, 1, 0};
    CHECK(multinomial(parts) == 3);
    // 21! exceeds 64-bit range; must still be exact
    CHECK(factorial(21) % 19 == factorial(21) % 19);
    CHECK(Rational(factorial(21), factorial(20)) == Rational(21));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK_THROWS_WITH(bernoulli_number(3), "odd Bernoulli index");

    // defining recurrence sum_{j=0}^m C(m+1,j) B_j = 0 for m >= 1,
    // checked on even entries with odd ones (except B_1 = -1/2) zero
    for (int m = 2; m <= 12; m += 2) {
        Rational acc;
        for (int j = 0; j <= m; ++j) {
            Rational bj;
            if (j == 0)
                bj = Rational(1);
            else if (j == 1)
                bj = Rational(-1, 2);
            else if (j % 2 == 0)
                bj = bernoulli_number(j);
            acc += Rational(binomial(m + 1, j)) * bj;
        }
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("even zeta values") {
    CHECK(zeta_even(1) == PiPoly::term(Rational(1, 6), 1));
    CHECK(zeta_even(2) == PiPoly::term(Rational(1, 90), 2));
    CHECK(zeta_even(3) == PiPoly::term(Rational(1, 945), 3));
    CHECK_THROWS_WITH(zeta_even(0), "zeta argument out of range");

    // against partial sums of sum 1/m^(2k) with an Euler-Maclaurin tail
    // (the plain partial sum cannot reach 10 digits at k = 1)
    const double pi = 3.14159265358979;
    for (int k = 1; k <= 12; ++k) {
        const double M = 100000.0;
        double direct = 0;
        for (int m = 1; m < static_cast<int>(M); ++m) direct += std::pow(m, -2.0 * k);
        direct += std::pow(M, 1.0 - 2 * k) / (2 * k - 1);  // integral tail
        direct += std::pow(M, -2.0 * k) / 2;
        direct += (2.0 * k / 12) * std::pow(M, -2.0 * k - 1);
        double exact = zeta_even(k).to_double(pi);
        CHECK(std::abs(exact - direct) / direct < 1e-10);
    }
}

TEST_CASE("gamma binomial and its factorial continuation") {
    CHECK(gamma_binomial(0) == Rational(1));
    CHECK(gamma_binomial(2) == Rational(3, 8));
    CHECK(gamma_binomial(4) == Rational(35, 128));
    CHECK(gamma_times_factorial(3) == gamma_binomial(3) * Rational(6));
    // residue limits of Gamma(2m+1)/(Gamma(m+1) 4^m) at negative integers
    CHECK(gamma_times_factorial(-1) == Rational(-2));
    CHECK(gamma_times_factorial(-2) == Rational(4, 3));
}

TEST_CASE("pi-poly ring") {
    PiPoly zero;
    PiPoly a = PiPoly::term(Rational(1, 2), 1) + PiPoly(3);
    PiPoly b = PiPoly::term(Rational(-1, 2), 1);
    CHECK((a + b) == PiPoly(3));
    CHECK((a * zero).is_zero());
    CHECK((a - a).is_zero());

    std::mt19937 rng(7);
    auto random_poly = [&rng]() {
        PiPoly p;
        for (int k = 0; k < 3; ++k) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = 1 + static_cast<long>(rng() % 7);
            p += PiPoly::term(Rational(num, den), static_cast<int>(rng() % 4));
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        PiPoly x = random_poly(), y = random_poly(), z = random_poly();
        CHECK((x + y) == (y + x));
        CHECK((x * y) == (y * x));
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK(((x * y) * z) == (x * (y * z)));
        CHECK((x * (y + z)) == (x * y + x * z));
    }
}

TEST_CASE("pi-poly rendering") {
    PiPoly p = PiPoly::term(Rational(1, 12), 1) + PiPoly(Rational(1, 48));
    CHECK(p.str() == "1/48 + 1/12*pi^2");
    CHECK(PiPoly(Rational(2, 3)).str() == "2/3");
    CHECK(PiPoly::term(Rational(2, 3), 1).str(" * ") == "2/3 * pi^2");
    CHECK(PiPoly().str() == "0");
    PiPoly neg = PiPoly(1) - PiPoly::term(Rational(1, 30), 2);
    CHECK(neg.str() == "1 - 1/30*pi^4");
}

TEST_CASE("twist weights") {
    // u_{d1,d2} = (2d1+2d2+1)! zeta(2d1+2d2+2) / ((2d1+1)!(2d2+1)!)
    CHECK(twist_weight(0, 0) == zeta_even(1));
    CHECK(twist_weight(1, 0) == zeta_even(2));
    CHECK(twist_weight(1, 1) == zeta_even(3) * Rational(10, 3));
}
