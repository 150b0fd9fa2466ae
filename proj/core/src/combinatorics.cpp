#include "mvt/combinatorics.hpp"

#include <stdexcept>

namespace mvt {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    static std::vector<Integer> cache{1};
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    return cache[static_cast<size_t>(n)];
}

Integer int_pow(unsigned long base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
    return r;
}

Integer pow2(int k) { return int_pow(2, k); }

Integer double_factorial(int n) {
    if (n < -1) throw std::invalid_argument("double factorial of integer below -1");
    // index shift: cache[0] = (-1)!! = 1, cache[1] = 0!! = 1
    static std::vector<Integer> cache{1, 1};
    while (static_cast<int>(cache.size()) <= n + 1) {
        int k = static_cast<int>(cache.size()) - 1;  // next argument
        cache.push_back(cache[static_cast<size_t>(k - 1)] * k);
    }
    return cache[static_cast<size_t>(n + 1)];
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer multinomial(std::span<const int> parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    Integer r = factorial(total);
    for (int p : parts) r /= factorial(p);
    return r;
}

Rational bernoulli_number(int m) {
    if (m < 0) throw std::invalid_argument("negative Bernoulli index");
    if (m % 2 == 1 && m != 1) throw std::invalid_argument("odd Bernoulli index");
    if (m == 1) throw std::invalid_argument("odd Bernoulli index");
    static std::vector<Rational> cache{Rational(1)};  // all indices, incl. odd
    while (static_cast<int>(cache.size()) <= m) {
        int k = static_cast<int>(cache.size());
        // B_k = -1/(k+1) * sum_{j<k} C(k+1,j) B_j
        Rational acc;
        for (int j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * cache[static_cast<size_t>(j)];
        cache.push_back(acc / Rational(-(k + 1)));
    }
    return cache[static_cast<size_t>(m)];
}

Rational zeta_even_rational(int k) {
    if (k <= 0) throw std::invalid_argument("zeta argument out of range");
    // zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!)
    Rational b = bernoulli_number(2 * k);
    Rational r = b * Rational(pow2(2 * k), Integer(2 * factorial(2 * k)));
    return (k % 2 == 0) ? -r : r;
}

PiPoly zeta_even(int k) { return PiPoly::term(zeta_even_rational(k), k); }

Rational gamma_binomial(int k) {
    if (k < 0) throw std::invalid_argument("gamma_binomial needs k >= 0; use gamma_times_factorial");
    return Rational(binomial(2 * k, k), int_pow(4, k));
}

Rational gamma_times_factorial(int k) {
    if (k >= 0) return gamma_binomial(k) * Rational(factorial(k));
    // Residue limit of Gamma(2m+1)/Gamma(m+1) at m = k, times 4^(-k).
    Rational core(factorial(-k - 1), Integer(2 * factorial(-2 * k - 1)));
    if (k % 2 != 0) core = -core;
    return core * Rational(int_pow(4, -k));
}

}  // namespace mvt
