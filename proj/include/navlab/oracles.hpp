#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "navlab/arith.hpp"
#include "navlab/core_quotient.hpp"
#include "navlab/galois.hpp"
#include "navlab/global_chars.hpp"
#include "navlab/partition.hpp"
#include "navlab/quadratic.hpp"

// Independent brute-force and numeric oracles. Deliberately use different
// algorithms than the main path: border-strip surgery on the diagram instead
// of the abacus, recursion instead of closed formulas, floating point
// instead of symbols.
namespace navlab::oracles {

using CycleType = Partition;

/// Removes the border strip of the given length whose hand is the last cell
/// of hand_row, walking the rim (down when possible, else left). Returns the
/// remaining partition and the number of rows spanned, or nothing when no
/// such strip exists.
inline std::optional<std::pair<Partition, int>> remove_border_strip(const Partition& lam,
                                                                    int hand_row, int length) {
    if (hand_row < 1 || hand_row > lam.rows() || length < 1) return std::nullopt;
    int r = hand_row, c = lam.row(hand_row);
    std::vector<int> removed(lam.rows() + 1, 0);
    removed[r] = 1;
    int collected = 1;
    while (collected < length) {
        if (lam.row(r + 1) >= c)
            ++r;
        else if (c > 1)
            --c;
        else
            return std::nullopt;  // walked off the diagram
        ++removed[r];
        ++collected;
    }
    std::vector<int> parts;
    for (int i = 1; i <= lam.rows(); ++i) parts.push_back(lam.row(i) - removed[i]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return std::nullopt;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return std::nullopt;
    }
    return std::make_pair(Partition(std::move(parts)), r - hand_row + 1);
}

/// Murnaghan-Nakayama: signed border-strip recursion for the symmetric group
/// character value at a cycle type.
inline long long mn_value(const Partition& lam, const CycleType& rho) {
    if (lam.n() != rho.n()) throw std::domain_error("mn_value: size mismatch");
    auto rec = [](auto&& self, const Partition& shape, const std::vector<int>& cycles,
                  std::size_t idx) -> long long {
        if (idx == cycles.size()) return 1;
        long long total = 0;
        for (int i = 1; i <= shape.rows(); ++i)
            if (auto strip = remove_border_strip(shape, i, cycles[idx])) {
                const long long sign = (strip->second - 1) % 2 ? -1 : 1;
                total += sign * self(self, strip->first, cycles, idx + 1);
            }
        return total;
    };
    return rec(rec, lam, rho.parts(), 0);
}

/// Core by repeated removal of length-p border strips (topmost hand first),
/// quotient read off the diagram: row i contributes to component
/// (row_length - i) mod p a part equal to the number of its cells whose hook
/// length is divisible by p. Agrees with the abacus computation.
inline CoreQuotient rim_hook_core_quotient(const Partition& lam, int p) {
    if (!is_odd_prime(p))
        throw std::domain_error("rim_hook_core_quotient: p must be an odd prime");
    CoreQuotient cq;
    cq.p = p;

    Partition cur = lam;
    for (bool found = true; found;) {
        found = false;
        for (int i = 1; i <= cur.rows() && !found; ++i)
            if (auto strip = remove_border_strip(cur, i, p)) {
                cur = strip->first;
                found = true;
            }
    }
    cq.core = cur;

    std::vector<std::vector<int>> buckets(p);
    for (int i = 1; i <= lam.rows(); ++i) {
        int count = 0;
        for (int j = 1; j <= lam.row(i); ++j)
            if (hook_at(lam, i, j).length() % p == 0) ++count;
        buckets[mod_pos(lam.row(i) - i, p)].push_back(count);
    }
    for (int g = 0; g < p; ++g) cq.quotient.push_back(Partition(std::move(buckets[g])));
    return cq;
}

/// Numeric check of the Galois sign: embeds sqrt(D) as a product of explicit
/// quadratic Gauss sums sum_j exp(2 pi i j^2 / q) and an i-factor, applies
/// sigma by exponentiating every root of unity, and reads the sign off the
/// ratio. Throws when the ratio is not within 1e-6 of +-1.
inline int gauss_sum_numeric(const GaloisElement& sigma, long long D) {
    const auto dec = decompose_radicand(D, sigma.p);
    if (dec.square != 1)
        throw std::domain_error("gauss_sum_numeric: radicand must be squarefree");
    if (dec.m > 10000)
        throw std::domain_error("gauss_sum_numeric: radicand too large");

    const auto gauss = [](long long q, long long a) {
        std::complex<double> sum = 0;
        for (long long j = 0; j < q; ++j) {
            const long long res = j * j % q * (a % q) % q;
            const double angle = 2.0 * M_PI * static_cast<double>(res) / static_cast<double>(q);
            sum += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return sum;
    };

    const auto primes = detail::odd_prime_factors(dec.m);
    int t3 = 0;
    for (long long q : primes)
        if (q % 4 == 3) ++t3;
    const int c = (t3 + (dec.sign < 0 ? 1 : 0)) % 2;

    std::complex<double> image = 1, original = 1;
    for (long long q : primes) {
        const long long a = q == sigma.p ? sigma.k : powmod(sigma.p, sigma.e, q);
        image *= gauss(q, a);
        original *= gauss(q, 1);
    }
    if (c == 1) {
        original *= std::complex<double>(0, 1);
        image *= std::complex<double>(0, powmod(sigma.p, sigma.e, 4) == 1 ? 1 : -1);
    }

    const std::complex<double> ratio = image / original;
    if (std::abs(ratio.imag()) > 1e-6 || std::abs(std::abs(ratio.real()) - 1.0) > 1e-6)
        throw std::runtime_error("gauss_sum_numeric: ratio is not +-1");
    return ratio.real() > 0 ? 1 : -1;
}

struct AltClassInfo {
    CycleType type;
    bool split = false;
    int sign = +1;  // meaningful only when split
    long long size = 0;
    long long centralizer = 0;
};

/// Full character table of the alternating group at desk scale, with exact
/// integer and quadratic entries.
struct AltTable {
    int n = 0;
    std::vector<AltChar> rows;
    std::vector<AltClassInfo> classes;
    std::vector<std::vector<QuadraticValue>> values;
    long long group_order = 1;

    int identity_class() const {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (classes[c].type.rows() == n) return static_cast<int>(c);
        throw std::logic_error("AltTable: missing identity class");
    }

    long long row_degree(int r) const { return values[r][identity_class()].integer_value(); }
};

namespace detail_table {

inline long long centralizer_order_sym(const CycleType& rho) {
    long long z = 1;
    std::map<int, int> mult;
    for (int part : rho.parts()) ++mult[part];
    for (auto [part, m] : mult)
        for (int i = 1; i <= m; ++i) z *= static_cast<long long>(part) * i;
    return z;
}

inline bool class_splits(const CycleType& rho) {
    for (int i = 1; i <= rho.rows(); ++i) {
        if (rho.row(i) % 2 == 0) return false;
        if (i < rho.rows() && rho.row(i) == rho.row(i + 1)) return false;
    }
    return true;
}

}  // namespace detail_table

/// Builds the table for n <= 7. Rows come from restriction, split-class
/// values from the closed difference formula, everything else from the
/// Murnaghan-Nakayama recursion.
inline AltTable alt_table(int n) {
    if (n < 0 || n > 7) throw std::domain_error("alt_table: supported for 0 <= n <= 7");
    AltTable t;
    t.n = n;
    if (n <= 1) {  // trivial group: one character, one class
        AltChar triv;
        triv.label = n == 1 ? Partition{1} : Partition{};
        triv.label_conj = triv.label;
        t.rows.push_back(triv);
        t.classes.push_back(AltClassInfo{triv.label, false, +1, 1, 1});
        t.values = {{QuadraticValue::integer(1)}};
        return t;
    }
    t.group_order = (factorial(n) / 2).convert_to<long long>();

    const auto all = enumerate_partitions(n);
    for (const auto& lam : all) {
        const Partition conj = conjugate(lam);
        if (lam == conj) {
            for (auto& row : restrict_to_alt(lam)) t.rows.push_back(row);
        } else if (lam > conj) {
            t.rows.push_back(restrict_to_alt(lam)[0]);
        }
    }
    for (const auto& rho : all) {
        if ((n - rho.rows()) % 2 != 0) continue;  // odd class
        const long long z = detail_table::centralizer_order_sym(rho);
        if (detail_table::class_splits(rho)) {
            const long long half = factorial(n).convert_to<long long>() / (2 * z);
            t.classes.push_back(AltClassInfo{rho, true, +1, half, z});
            t.classes.push_back(AltClassInfo{rho, true, -1, half, z});
        } else {
            const long long size = factorial(n).convert_to<long long>() / z;
            t.classes.push_back(AltClassInfo{rho, false, +1, size, z / 2});
        }
    }

    for (const auto& row : t.rows) {
        std::vector<QuadraticValue> vals;
        for (const auto& cls : t.classes) {
            if (row.kind == RestrictKind::NonSplit) {
                vals.push_back(QuadraticValue::integer(mn_value(row.label, cls.type)));
            } else if (cls.split && cls.type.parts() == splitting_class_of(row.label)) {
                const int eps = epsilon_lambda(row.label);
                const long long D = split_radicand(row.label);
                vals.push_back(QuadraticValue::half(eps, row.sign == cls.sign ? 1 : -1, D));
            } else {
                vals.push_back(QuadraticValue::half(mn_value(row.label, cls.type), 0, 0));
            }
        }
        t.values.push_back(std::move(vals));
    }
    return t;
}

namespace detail_table {

// Accumulates sums of (r + s sqrt(D))/2 terms over mixed radicands, in
// halves: key 0 holds the rational numerator, key D the sqrt(D) numerator.
struct QuadraticAccumulator {
    std::map<long long, long long> halves;

    void add(const QuadraticValue& v, long long weight) {
        halves[0] += weight * v.r();
        if (v.s() != 0) halves[v.radicand()] += weight * v.s();
    }

    bool equals_integer(long long target) const {
        for (const auto& [rad, num] : halves)
            if (rad != 0 && num != 0) return false;
        auto it = halves.find(0);
        return (it == halves.end() ? 0 : it->second) == 2 * target;
    }
};

}  // namespace detail_table

/// Exact first orthogonality: sum over classes of |class| * chi_i * conj(chi_j)
/// equals |G| exactly when i = j and vanishes otherwise.
inline bool first_orthogonality(const AltTable& t) {
    const std::size_t k = t.rows.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            detail_table::QuadraticAccumulator acc;
            for (std::size_t c = 0; c < t.classes.size(); ++c)
                acc.add(t.values[i][c] * t.values[j][c].conj(), t.classes[c].size);
            if (!acc.equals_integer(i == j ? t.group_order : 0)) return false;
        }
    return true;
}

/// Exact second orthogonality: sum over rows of chi(c) * conj(chi(c')) equals
/// the centralizer order when c = c' and vanishes otherwise.
inline bool second_orthogonality(const AltTable& t) {
    const std::size_t k = t.classes.size();
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t c2 = c; c2 < k; ++c2) {
            detail_table::QuadraticAccumulator acc;
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                acc.add(t.values[i][c] * t.values[i][c2].conj(), 1);
            if (!acc.equals_integer(c == c2 ? t.classes[c].centralizer : 0)) return false;
        }
    return true;
}

inline bool orthogonality_holds(const AltTable& t) {
    return first_orthogonality(t) && second_orthogonality(t);
}

/// Applies sigma entrywise to a table row: rational entries are fixed,
/// quadratic entries pick up the Galois sign on their radicand.
inline std::vector<QuadraticValue> apply_sigma_to_row(const std::vector<QuadraticValue>& row,
                                                      const GaloisElement& sigma) {
    std::vector<QuadraticValue> out;
    for (const auto& v : row) {
        if (v.is_rational())
            out.push_back(v);
        else
            out.push_back(QuadraticValue::half(v.r(), v.s() * galois_sign(sigma, v.radicand()),
                                               v.radicand()));
    }
    return out;
}

/// Counts sigma-fixed p'-characters by direct table inspection: transform
/// each p'-row and test equality against every row of the table.
inline long long brute_count_fixed_global(int n, int p, const GaloisElement& sigma) {
    if (!is_odd_prime(p))
        throw std::domain_error("brute_count_fixed_global: p must be an odd prime");
    const AltTable t = alt_table(n);
    long long count = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.row_degree(static_cast<int>(r)) % p == 0) continue;
        const auto image = apply_sigma_to_row(t.values[r], sigma);
        bool found = false;
        for (std::size_t r2 = 0; r2 < t.rows.size(); ++r2)
            if (t.values[r2] == image) {
                if (r2 == r) ++count;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("brute_count_fixed_global: sigma image is not a row");
    }
    return count;
}

}  // namespace navlab::oracles
