#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "navlab/arith.hpp"

namespace navlab {

/// A Galois element sigma acting on roots of unity: every p'-root xi goes to
/// xi^(p^e), and p-power roots zeta go to zeta^k. The exponent on p'-roots
/// does not determine the action on p-power roots, so k is carried
/// explicitly; only k mod p matters for the radicands in scope.
struct GaloisElement {
    int p = 3;
    int e = 0;
    int k = 1;

    GaloisElement(int p_, int e_, int k_) : p(p_), e(e_) {
        if (!is_odd_prime(p)) throw std::domain_error("GaloisElement: p must be an odd prime");
        if (e < 0) throw std::domain_error("GaloisElement: e must be nonnegative");
        k = mod_pos(k_, p);
        if (k == 0) throw std::domain_error("GaloisElement: k must be a unit mod p");
    }
};

/// Jacobi symbol (a/m) for odd positive m; 0 when gcd(a, m) > 1. Equals the
/// Legendre symbol for prime m.
inline int jacobi(long long a, long long m) {
    if (m < 1 || m % 2 == 0)
        throw std::domain_error("jacobi: modulus must be odd and positive");
    a %= m;
    if (a < 0) a += m;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

/// D = sign * square^2 * m with m odd squarefree. Radicands in scope are
/// signed products of odd hook lengths, so even D is rejected loudly.
struct RadicandDecomposition {
    int sign = 1;            // +1 or -1
    long long square = 1;    // root of the largest square divisor
    long long m = 1;         // odd squarefree part
    int p_exponent = 0;      // 1 iff p divides m
};

inline RadicandDecomposition decompose_radicand(long long D, int p) {
    if (!is_odd_prime(p)) throw std::domain_error("decompose_radicand: p must be an odd prime");
    if (D == 0 || D % 2 == 0)
        throw std::domain_error("decompose_radicand: radicand must be odd and nonzero");
    RadicandDecomposition out;
    out.sign = D < 0 ? -1 : 1;
    long long rest = D < 0 ? -D : D;
    for (long long q = 3; q * q <= rest; q += 2) {
        int exp = 0;
        while (rest % q == 0) {
            rest /= q;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i) out.square *= q;
        if (exp % 2) out.m *= q;
    }
    if (rest > 1) out.m *= rest;
    out.p_exponent = out.m % p == 0 ? 1 : 0;
    return out;
}

namespace detail {

inline std::vector<long long> odd_prime_factors(long long m) {
    std::vector<long long> out;
    for (long long q = 3; q * q <= m; q += 2)
        if (m % q == 0) {
            out.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace detail

/// sigma(sqrt(D))/sqrt(D) for odd nonzero D, as +1 or -1. sqrt(D) factors
/// through Gauss sums: with the signed squarefree part s*q1*...*qt, write
/// sqrt(s*prod q) = i^c * prod sqrt(q*) where q* = (-1)^((q-1)/2) q and
/// c in {0,1} matches the sign. sigma multiplies each sqrt(q*) by the
/// Legendre symbol of its exponent and i by (-1)^((p^e-1)/2).
inline int galois_sign(const GaloisElement& sigma, long long D) {
    const auto dec = decompose_radicand(D, sigma.p);
    if (dec.m == 1 && dec.sign > 0) return 1;  // rational square root

    const auto primes = detail::odd_prime_factors(dec.m);
    int t3 = 0;
    for (long long q : primes)
        if (q % 4 == 3) ++t3;
    const int c = (t3 + (dec.sign < 0 ? 1 : 0)) % 2;

    int sign = 1;
    if (c == 1 && powmod(sigma.p, sigma.e, 4) == 3) sign = -sign;
    for (long long q : primes) {
        if (q == sigma.p)
            sign *= jacobi(sigma.k, sigma.p);
        else
            sign *= jacobi(powmod(sigma.p, sigma.e, q), q);
    }
    return sign;
}

enum class PairAction { Fixed, Swapped };

/// How sigma acts on a split pair whose difference is sqrt(D): the two
/// members are fixed when sigma fixes sqrt(D) and exchanged otherwise.
inline PairAction act_on_pair(const GaloisElement& sigma, long long D) {
    return galois_sign(sigma, D) == 1 ? PairAction::Fixed : PairAction::Swapped;
}

enum class Side { Global, Local };

/// Non-split restrictions are sigma-fixed on both sides: global values are
/// rational integers, and local non-split values lie in Q(zeta_{p-1}), where
/// xi -> xi^(p^e) is the identity because p = 1 mod (p-1).
constexpr bool is_fixed_nonsplit(Side) { return true; }

/// A restricted character together with the radicand of its split
/// difference; non-split entries carry no radicand.
struct CountedChar {
    bool split = false;
    long long radicand = 0;  // meaningful only when split
};

/// sigma-fixed count: each non-split restriction contributes one fixed
/// character, each split pair contributes two when fixed and zero when
/// swapped.
inline long long count_sigma_fixed(const std::vector<CountedChar>& chars,
                                   const GaloisElement& sigma) {
    long long count = 0;
    for (const auto& c : chars) {
        if (!c.split)
            count += 1;
        else if (act_on_pair(sigma, c.radicand) == PairAction::Fixed)
            count += 2;
    }
    return count;
}

}  // namespace navlab
