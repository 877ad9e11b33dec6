#pragma once

#include "cychodge/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cychodge {

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, integral for any
/// integer n and k >= 0.
inline Int binomial(const Int& n, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    if (k == 0) return 1;
    if (n < 0) {
        // C(n,k) = (-1)^k C(k-n-1, k)
        Int r = binomial(k - n - 1, k);
        return (k % 2 == 0) ? r : Int(-r);
    }
    if (n < k) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) * (i-1)!... stays integral
    }
    return r;
}

inline Int binomial(long n, long k) { return binomial(Int(n), k); }

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

/// Count of 1 <= i <= d with gcd(i,d) = 1.
inline long euler_phi(long d) {
    if (d <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    long result = d;
    long m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline bool is_prime(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Computed as (x^N - 1) / prod of the cyclotomic polynomials of the
/// proper divisors; the division is exact over the integers.
inline std::vector<Int> cyclotomic_polynomial(long N) {
    if (N <= 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    // x^N - 1
    std::vector<Int> poly(static_cast<size_t>(N) + 1, 0);
    poly[0] = -1;
    poly[static_cast<size_t>(N)] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        std::vector<Int> div = cyclotomic_polynomial(d);
        // exact long division by the monic divisor
        std::vector<Int> quot(poly.size() - div.size() + 1, 0);
        std::vector<Int> rem = poly;
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            Int c = rem[static_cast<size_t>(i) + div.size() - 1];
            quot[static_cast<size_t>(i)] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < div.size(); ++j)
                rem[static_cast<size_t>(i) + j] -= c * div[j];
        }
        poly = quot;
    }
    return poly;
}

}  // namespace cychodge
