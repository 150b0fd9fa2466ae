#pragma once

#include <span>
#include <vector>

#include "mvt/pi_poly.hpp"
#include "mvt/rational.hpp"

namespace mvt {

/// n!, n >= 0.
Integer factorial(int n);

/// base^exp as an exact integer, exp >= 0.
Integer int_pow(unsigned long base, int exp);

/// 2^k, k >= 0.
Integer pow2(int k);

/// n!! for n >= -1, with the convention (-1)!! = 1.
Integer double_factorial(int n);

/// Binomial coefficient, 0 when k < 0 or k > n.
Integer binomial(int n, int k);

/// (sum parts)! / prod(parts!). Returns 0 if any part is negative.
Integer multinomial(std::span<const int> parts);

/// Bernoulli number B_m for even m >= 0 (B_0 = 1, B_2 = 1/6, B_4 = -1/30, ...)
/// via the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0. Cached.
Rational bernoulli_number(int m);

/// zeta(2k) as an exact rational multiple of pi^(2k), k >= 1.
PiPoly zeta_even(int k);

/// Rational coefficient of pi^(2k) in zeta(2k).
Rational zeta_even_rational(int k);

/// gamma_k = C(2k,k) / 4^k for k >= 0.
Rational gamma_binomial(int k);

/// The continued product k! * gamma_k, defined for every integer k: for
/// k >= 0 it is (2k)!/(k! 4^k), and for k < 0 it is the limit value
/// lim_{m->k} Gamma(2m+1)/(Gamma(m+1) 4^m), which evaluates to
/// (-1)^k (-k-1)! 4^(-k) / (2 (-2k-1)!).
Rational gamma_times_factorial(int k);

}  // namespace mvt
