#include "mvt/genus_one.hpp"

#include <numeric>
#include <stdexcept>

#include "mvt/combinatorics.hpp"

namespace mvt {

Rational genus_one_closed(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    if (n < 1) throw std::invalid_argument("empty index");
    for (int x : a)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (std::accumulate(a.begin(), a.end(), 0) != n) return Rational();

    Integer acc = multinomial(a);
    // Subtract the lambda-class corrections over b in {0,1}^n with |b| >= 2.
    std::vector<int> shifted(a.size());
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        int weight = __builtin_popcountll(mask);
        if (weight < 2) continue;  // (|b|-2)! undefined below 0
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            shifted[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - ((mask >> i) & 1);
            if (shifted[static_cast<size_t>(i)] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        acc -= multinomial(shifted) * factorial(weight - 2);
    }
    return Rational(acc, 24);
}

Rational genus_one_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Rational acc(int_pow(static_cast<unsigned long>(n), n));
    for (int k = 1; k <= n - 1; ++k) {
        Rational term(Integer(int_pow(static_cast<unsigned long>(n), n - k) * factorial(n - 1)),
                      Integer(Integer(k) * (k + 1) * factorial(n - k - 1)));
        acc -= term;
    }
    return acc / Rational(24);
}

}  // namespace mvt
