#pragma once

#include <stdexcept>

namespace navlab {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(long long n) { return n > 2 && n % 2 == 1 && is_prime(n); }

inline long long powmod(long long base, long long exp, long long mod) {
    if (mod <= 0) throw std::domain_error("powmod: modulus must be positive");
    if (exp < 0) throw std::domain_error("powmod: exponent must be nonnegative");
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

/// Nonnegative residue of a mod m (m > 0).
inline int mod_pos(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace navlab
