#include "mvt/siegel_veech.hpp"

#include <stdexcept>
#include <vector>

#include "mvt/combinatorics.hpp"

namespace mvt {

namespace {

bool sv_defined(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n >= 2; }

/// The cut sum 1/4 ( VOmega_{g-1,n+2}(0) + 1/2 sum ... ) of the corSv form.
PiPoly curve_cut_sum(Session& s, int g, int n) {
    PiPoly acc;
    if (g >= 1 && is_stable(g - 1, n + 2)) acc += s.mv_constant_term(g - 1, n + 2);
    PiPoly sep;
    for (int g1 = 0; g1 <= g; ++g1) {
        for (int n1 = 0; n1 <= n; ++n1) {
            int g2 = g - g1, n2 = n - n1;
            if (!is_stable(g1, 1 + n1) || !is_stable(g2, 1 + n2)) continue;
            Rational ways(factorial(n), factorial(n1) * factorial(n2));
            sep += s.mv_constant_term(g1, 1 + n1) * s.mv_constant_term(g2, 1 + n2) * ways;
        }
    }
    acc += sep / Rational(2);
    return acc / Rational(4);
}

}  // namespace

PiPoly sv_constant(Session& s, int g, int n) {
    if (!sv_defined(g, n)) throw std::invalid_argument("Siegel--Veech undefined for this type");
    PiPoly num = curve_cut_sum(s, g, n);
    PiPoly den = s.mv_constant_term(g, n);
    // pi^2 * SV: the quotient drops one pi^2 grade below num/den's ratio.
    return (num / den).shifted(1);
}

PiPoly sv_times_mv(Session& s, int g, int n) {
    if (!sv_defined(g, n)) throw std::invalid_argument("Siegel--Veech undefined for this type");
    PiPoly acc;
    if (g >= 1) {
        Rational pre(Integer(4 * g - 4 + n) * (4 * g - 5 + n),
                     Integer(6 * g - 7 + 2 * n) * (6 * g - 8 + 2 * n));
        acc += s.mv_volume(g - 1, n + 2) * pre;
    }
    // factorial ratio (6gi-5+2ni)!/(4gi-3+ni)!, with the continued value 1/2
    // at (gi,ni) = (0,2) where both arguments are negative
    auto ratio = [](int gi, int ni) {
        if (gi == 0 && ni == 2) return Rational(1, 2);
        return Rational(factorial(6 * gi - 5 + 2 * ni), factorial(4 * gi - 3 + ni));
    };
    PiPoly sep;
    for (int g1 = 0; g1 <= g; ++g1) {
        for (int n1 = 0; n1 <= n; ++n1) {
            int g2 = g - g1, n2 = n - n1;
            if (!is_stable(g1, 1 + n1) || !is_stable(g2, 1 + n2)) continue;
            Rational c(factorial(n), factorial(n1) * factorial(n2));
            c *= ratio(g1, n1) * ratio(g2, n2);
            c *= Rational(factorial(4 * g - 4 + n), factorial(6 * g - 7 + 2 * n));
            sep += s.mv_volume(g1, 1 + n1) * s.mv_volume(g2, 1 + n2) * c;
        }
    }
    acc += sep / Rational(8);
    return acc;
}

bool sqrtz_consistency(Session& s, int g_max, int n_max) {
    int nn = n_max + 3;
    // F[g][n] = VOmega_{g,n}(0) / pi^(6g-6+2n), zero outside stability.
    std::vector<std::vector<Rational>> F(static_cast<size_t>(g_max + 1),
                                         std::vector<Rational>(static_cast<size_t>(nn + 1)));
    for (int g = 0; g <= g_max; ++g)
        for (int n = 1; n <= nn; ++n)
            if (is_stable(g, n))
                F[static_cast<size_t>(g)][static_cast<size_t>(n)] =
                    s.mv_constant_term(g, n).coeff(dimension(g, n)) / Rational(factorial(n));

    auto d_dx = [nn](const std::vector<Rational>& a) {
        std::vector<Rational> out(static_cast<size_t>(nn + 1));
        for (int n = 0; n < nn; ++n) out[static_cast<size_t>(n)] = a[static_cast<size_t>(n + 1)] * Rational(n + 1);
        return out;
    };
    auto mul = [nn](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(static_cast<size_t>(nn + 1));
        for (int i = 0; i <= nn; ++i)
            for (int j = 0; i + j <= nn; ++j)
                out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        return out;
    };

    for (int g = 0; g <= g_max; ++g) {
        std::vector<Rational> rhs(static_cast<size_t>(nn + 1));
        if (g >= 1) {
            auto d2 = d_dx(d_dx(F[static_cast<size_t>(g - 1)]));
            for (int n = 0; n <= nn; ++n) rhs[static_cast<size_t>(n)] += d2[static_cast<size_t>(n)] / Rational(4);
        }
        for (int g1 = 0; g1 <= g; ++g1) {
            auto prod = mul(d_dx(F[static_cast<size_t>(g1)]), d_dx(F[static_cast<size_t>(g - g1)]));
            for (int n = 0; n <= nn; ++n) rhs[static_cast<size_t>(n)] += prod[static_cast<size_t>(n)] / Rational(8);
        }
        for (int n = 0; n <= n_max; ++n) {
            if (2 * g - 2 + n < 2) continue;
            Rational lhs = sv_constant(s, g, n).coeff(0) *
                           s.mv_constant_term(g, n).coeff(dimension(g, n)) / Rational(factorial(n));
            if (lhs != rhs[static_cast<size_t>(n)]) return false;
        }
    }
    return true;
}

}  // namespace mvt
