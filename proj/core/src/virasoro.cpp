#include "mvt/virasoro.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "mvt/combinatorics.hpp"

namespace mvt {

PiPoly twist_weight(int d1, int d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative exponent");
    int k = d1 + d2 + 1;
    Rational c(factorial(2 * d1 + 2 * d2 + 1), factorial(2 * d1 + 1) * factorial(2 * d2 + 1));
    return PiPoly::term(c * zeta_even_rational(k), k);
}

PiPoly CoeffEngine::coeff(const MultiIndex& idx) {
    if (const PiPoly* p = table_.find(idx)) return *p;
    PiPoly v = compute(idx);
    table_.store(idx, std::move(v));
    return *table_.find(idx);
}

PiPoly CoeffEngine::row_coeff(int g, int n, int d) {
    std::vector<int> dv(static_cast<size_t>(n), 0);
    dv[0] = d;
    return coeff(g, n, std::move(dv));
}

PiPoly CoeffEngine::lookup(int g, int n, std::vector<int> d) {
    if (g < 0 || !is_stable(g, n)) return PiPoly();
    int total = 0;
    for (int x : d) {
        if (x < 0) return PiPoly();
        total += x;
    }
    if (total > dimension(g, n)) return PiPoly();
    if (theory() == Theory::Kontsevich && total != dimension(g, n)) return PiPoly();
    return coeff(MultiIndex(g, n, std::move(d)));
}

PiPoly CoeffEngine::compute(const MultiIndex& idx) {
    int g = idx.g(), n = idx.n();
    const std::vector<int>& d = idx.d();
    int total = idx.total_degree();
    int dim = idx.dim();

    if (total > dim) return PiPoly();
    if (theory() == Theory::Kontsevich && total != dim) return PiPoly();

    if (g == 0 && n == 3) return PiPoly(1);  // only d = (0,0,0) reaches here
    if (g == 1 && n == 1) {
        PiPoly v;
        if (d[0] == 1) v += PiPoly(Rational(1, 8));
        if (d[0] == 0 && twisted()) v += zeta_even(1) / Rational(2);
        return v;
    }

    return recursion_rhs(g, n, d[0], std::vector<int>(d.begin() + 1, d.end()));
}

PiPoly CoeffEngine::recursion_rhs(int g, int n, int d1, const std::vector<int>& rest) {
    PiPoly acc;

    // B-kernel terms: remove one of the other boundary exponents.
    for (size_t m = 0; m < rest.size(); ++m) {
        int j = rest[m];
        std::vector<int> remaining;
        remaining.reserve(rest.size());
        for (size_t i = 0; i < rest.size(); ++i)
            if (i != m) remaining.push_back(rest[i]);
        int s = std::accumulate(remaining.begin(), remaining.end(), 0);

        // (2j+1) delta_{d1+j, a+1}
        int a = d1 + j - 1;
        if (a >= 0) {
            std::vector<int> child = remaining;
            child.insert(child.begin(), a);
            acc += lookup(g, n - 1, std::move(child)) * Rational(2 * j + 1);
        }
        // twist: delta_{d1,0} delta_{j,0} zeta(2a+2)
        if (twisted() && d1 == 0 && j == 0) {
            int amax = dimension(g, n - 1) - s;
            for (int aa = 0; aa <= amax; ++aa) {
                std::vector<int> child = remaining;
                child.insert(child.begin(), aa);
                PiPoly f = lookup(g, n - 1, std::move(child));
                if (!f.is_zero()) acc += f * zeta_even(aa + 1);
            }
        }
    }

    // C-kernel terms.
    int bound = dimension(g, n);
    int rest_sum = std::accumulate(rest.begin(), rest.end(), 0);
    size_t nsub = size_t{1} << rest.size();
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; b <= bound; ++b) {
            PiPoly kernel;
            if (a + b + 2 == d1) kernel += PiPoly(1);
            if (twisted()) {
                // (2a+2m+1)! zeta(2a+2m+2) / ((2a+1)!(2m)!) at m = b+1-d1
                if (int m = b + 1 - d1; m >= 0) {
                    int k = a + m + 1;
                    Rational c(factorial(2 * a + 2 * m + 1), factorial(2 * a + 1) * factorial(2 * m));
                    kernel += PiPoly::term(c * zeta_even_rational(k), k);
                }
                if (int m = a + 1 - d1; m >= 0) {
                    int k = b + m + 1;
                    Rational c(factorial(2 * b + 2 * m + 1), factorial(2 * b + 1) * factorial(2 * m));
                    kernel += PiPoly::term(c * zeta_even_rational(k), k);
                }
                if (d1 == 0) kernel += zeta_even(a + 1) * zeta_even(b + 1);
            }
            if (kernel.is_zero()) continue;

            PiPoly bracket;
            // Non-separating term.
            if (g >= 1 && a + b + rest_sum <= dimension(g - 1, n + 1)) {
                std::vector<int> child = rest;
                child.insert(child.begin(), b);
                child.insert(child.begin(), a);
                bracket += lookup(g - 1, n + 1, std::move(child));
            }
            // Separating terms over ordered (h, J).
            for (int h = 0; h <= g; ++h) {
                for (size_t mask = 0; mask < nsub; ++mask) {
                    std::vector<int> left{a}, right{b};
                    for (size_t i = 0; i < rest.size(); ++i)
                        ((mask >> i) & 1 ? left : right).push_back(rest[i]);
                    int n1 = static_cast<int>(left.size()), n2 = static_cast<int>(right.size());
                    if (!is_stable(h, n1) || !is_stable(g - h, n2)) continue;
                    PiPoly f1 = lookup(h, n1, std::move(left));
                    if (f1.is_zero()) continue;
                    PiPoly f2 = lookup(g - h, n2, std::move(right));
                    if (f2.is_zero()) continue;
                    bracket += f1 * f2;
                }
            }
            if (!bracket.is_zero()) acc += kernel * bracket / Rational(2);
        }
    }
    return acc;
}

PiPoly CoeffEngine::coeff_reducing_on(int g, int n, const std::vector<int>& d, size_t pos) {
    if (pos >= d.size()) throw std::invalid_argument("bad reduction position");
    MultiIndex idx(g, n, d);
    int total = idx.total_degree();
    if (total > idx.dim()) return PiPoly();
    if (theory() == Theory::Kontsevich && total != idx.dim()) return PiPoly();
    if ((g == 0 && n == 3) || (g == 1 && n == 1)) return coeff(idx);
    std::vector<int> rest;
    rest.reserve(d.size());
    for (size_t i = 0; i < d.size(); ++i)
        if (i != pos) rest.push_back(d[i]);
    return recursion_rhs(g, n, d[pos], rest);
}

namespace {

void enumerate_sorted(int slots, int max_first, int budget, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (slots == 0) {
        emit(cur);
        return;
    }
    for (int v = std::min(max_first, budget); v >= 0; --v) {
        cur.push_back(v);
        enumerate_sorted(slots - 1, v, budget - v, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

EvenPolynomial CoeffEngine::polynomial(int g, int n) {
    if (!is_stable(g, n) || n < 1) throw std::invalid_argument("unstable type");
    EvenPolynomial poly(g, n);
    int dim = dimension(g, n);
    std::vector<int> cur;
    enumerate_sorted(n, dim, dim, cur, [&](const std::vector<int>& d) {
        PiPoly v = coeff(MultiIndex(g, n, d));
        if (!v.is_zero()) poly.set(d, v);
    });
    table_.mark_complete(g, n);
    return poly;
}

void Session::assert_normalization() {
    if (psi_intersection(0, {0, 0, 0}) != Rational(1) || psi_intersection(1, {1}) != Rational(1, 24))
        throw std::logic_error("intersection-number normalization broken");
}

Rational Session::kontsevich_coeff(const MultiIndex& idx) {
    return kontsevich_.coeff(idx).coeff(0);
}

Rational Session::psi_intersection(int g, const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    if (!is_stable(g, n)) throw std::invalid_argument("unstable type");
    Rational f = kontsevich_coeff(g, n, d);
    Rational denom(1);
    for (int x : d) denom *= Rational(double_factorial(2 * x + 1));
    return f / denom;
}

PiPoly Session::mv_volume(int g, int n) {
    if (n == 0) {
        if (g < 2) throw std::invalid_argument("undefined volume");
        Rational norm(pow2(4 * g - 2));
        norm *= Rational(factorial(4 * g - 4), factorial(6 * g - 6));
        return masur_veech_.coeff(g, 1, {1}) * norm;
    }
    if (!is_stable(g, n)) throw std::invalid_argument("undefined volume");
    if (g == 0 && n == 3) return PiPoly(4);  // conventional value
    Rational norm(pow2(4 * g - 2 + n));
    norm *= Rational(factorial(4 * g - 4 + n), factorial(6 * g - 7 + 2 * n));
    return masur_veech_.row_coeff(g, n, 0) * norm;
}

PiPoly Session::mv_constant_term(int g, int n) {
    if (n == 0) {
        if (g < 2) throw std::invalid_argument("unstable type");
        return masur_veech_.coeff(g, 1, {1}) / Rational(3 * (2 * g - 2));
    }
    if (!is_stable(g, n)) throw std::invalid_argument("unstable type");
    return masur_veech_.row_coeff(g, n, 0);
}

Rational Session::h_row_genus0_rational(int n, int d) {
    if (n < 3 || d < 0 || d > n - 3) return Rational();
    if (n == 3) return d == 0 ? Rational(1) : Rational();
    auto key = std::make_pair(n, d);
    if (auto it = h0_memo_.find(key); it != h0_memo_.end()) return it->second;

    Rational acc;
    auto pair_sum = [&](auto&& coefficient) {
        // sum over splittings H_{1+j}[a] H_{n-j}[b] with the given kernel
        Rational out;
        for (int j = 2; j <= n - 3; ++j) {
            Rational ways(binomial(n - 1, j));
            for (int a = 0; a <= j - 2; ++a) {
                Rational ha = h_row_genus0_rational(1 + j, a);
                if (ha.is_zero()) continue;
                for (int b = 0; b <= n - j - 3; ++b) {
                    Rational hb = h_row_genus0_rational(n - j, b);
                    if (hb.is_zero()) continue;
                    Rational k = coefficient(a, b);
                    if (!k.is_zero()) out += ways * k * ha * hb;
                }
            }
        }
        return out;
    };

    if (d == 0) {
        for (int a = 0; a <= n - 4; ++a)
            acc += Rational(n - 1) * zeta_even_rational(a + 1) * h_row_genus0_rational(n - 1, a);
        acc += pair_sum([](int a, int b) {
            Rational t(factorial(2 * a + 2 * b + 4), factorial(2 * a + 2) * factorial(2 * b + 2));
            t *= zeta_even_rational(a + b + 2);
            t += zeta_even_rational(a + 1) * zeta_even_rational(b + 1);
            return t / Rational(2);
        });
    } else if (d == 1) {
        acc += Rational(n - 1) * h_row_genus0_rational(n - 1, 0);
        acc += pair_sum([](int a, int b) {
            Rational t(factorial(2 * a + 2 * b + 2), factorial(2 * a + 1) * factorial(2 * b + 1));
            return t * zeta_even_rational(a + b + 1) / Rational(2);
        });
    } else {
        acc += Rational(n - 1) * h_row_genus0_rational(n - 1, d - 1);
        acc += pair_sum([d](int a, int b) {
            Rational t;
            if (a + b == d - 2) t += Rational(1, 2);
            if (a >= d - 1) {
                Rational u(factorial(2 * a + 2 * b + 3 - 2 * d),
                           factorial(2 * b + 1) * factorial(2 * a + 2 - 2 * d));
                t += u * zeta_even_rational(a + b + 2 - d);
            }
            return t;
        });
    }

    h0_memo_.emplace(key, acc);
    return acc;
}

PiPoly Session::h_row_genus0(int n, int d) {
    Rational r = h_row_genus0_rational(n, d);
    if (r.is_zero()) return PiPoly();
    return PiPoly::term(r, n - 3 - d);
}

}  // namespace mvt
