#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "navlab/correspondence.hpp"
#include "navlab/io.hpp"
#include "navlab/oracles.hpp"
#include "navlab/parallel.hpp"

// The acceptance grid: every check the project promises, runnable both from
// the dedicated acceptance binary and from the CLI selftest command.
namespace navlab::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // stats on pass, first failing case on failure
};

struct Options {
    bool quick = false;            // reduced grid, runs in a few seconds
    bool corrupt_epsilon = false;  // negative control: flips the local epsilon
};

namespace detail {

inline const std::vector<int>& primes() {
    static const std::vector<int> ps{3, 5, 7};
    return ps;
}

inline std::vector<GaloisElement> sigma_grid(int p, int emax = 2) {
    std::vector<GaloisElement> out;
    for (int e = 0; e <= emax; ++e)
        for (int k = 1; k < p; ++k) out.emplace_back(p, e, k);
    return out;
}

inline std::string first_failure(const std::vector<std::uint8_t>& ok,
                                 const std::vector<std::string>& tags) {
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i]) return tags[i];
    return {};
}

}  // namespace detail

/// 1. from_core_quotient inverts core_quotient and |core| + p*w = n,
/// for all partitions of n <= 20 and p in {3,5,7}.
inline CriterionResult criterion_roundtrip(const Options& opt) {
    const int nmax = opt.quick ? 12 : 20;
    long long checked = 0;
    std::string fail;
    for (int n = 0; n <= nmax && fail.empty(); ++n) {
        const auto all = enumerate_partitions(n);
        std::vector<std::uint8_t> ok(all.size(), 1);
        parallel_for_index(all.size(), [&](std::size_t i) {
            for (int p : detail::primes()) {
                const auto cq = core_quotient(all[i], p);
                if (from_core_quotient(cq) != all[i] || cq.core.n() + p * cq.weight() != n) {
                    ok[i] = 0;
                    return;
                }
            }
        });
        checked += static_cast<long long>(all.size());
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) {
                fail = "lambda=" + partition_string(all[i]);
                break;
            }
    }
    return {1, "core/quotient round trip", fail.empty(),
            fail.empty() ? std::to_string(checked) + " partitions x {3,5,7}" : fail};
}

/// 2. Conjugating the partition conjugates the core and reverses/conjugates
/// the quotient componentwise, same range as criterion 1.
inline CriterionResult criterion_duality(const Options& opt) {
    const int nmax = opt.quick ? 12 : 20;
    long long checked = 0;
    std::string fail;
    for (int n = 0; n <= nmax && fail.empty(); ++n) {
        const auto all = enumerate_partitions(n);
        std::vector<std::uint8_t> ok(all.size(), 1);
        parallel_for_index(all.size(), [&](std::size_t i) {
            for (int p : detail::primes()) {
                const auto cq = core_quotient(all[i], p);
                const auto cq_conj = core_quotient(conjugate(all[i]), p);
                if (cq_conj.core != conjugate(cq.core) ||
                    cq_conj.quotient != dual_mapping(cq.quotient)) {
                    ok[i] = 0;
                    return;
                }
            }
        });
        checked += static_cast<long long>(all.size());
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) {
                fail = "lambda=" + partition_string(all[i]);
                break;
            }
    }
    return {2, "conjugation duality of core and quotient", fail.empty(),
            fail.empty() ? std::to_string(checked) + " partitions x {3,5,7}" : fail};
}

/// 3. Diagonal hooks of the partition rebuilt from a middle-component
/// quotient are p times the component's diagonal hooks, every entry an odd
/// multiple of p. Self-conjugate components of size <= 6; p = 7 always,
/// p in {3,5} when p > |q|.
inline CriterionResult criterion_diagonal_scaling(const Options&) {
    long long checked = 0;
    for (int w = 0; w <= 6; ++w)
        for (const auto& q : enumerate_self_conjugate(w))
            for (int p : detail::primes()) {
                if (p != 7 && p <= w) continue;
                std::vector<Partition> comps(p);
                comps[middle_index(p)] = q;
                const Partition lam = from_core_quotient(CoreQuotient{p, Partition{}, comps});
                const auto scaled = diagonal_from_quotient(q, p);
                if (scaled != diagonal_hooks(lam))
                    return {3, "diagonal hook scaling", false,
                            "q=" + partition_string(q) + " p=" + std::to_string(p)};
                for (int h : scaled)
                    if (h % p != 0 || (h / p) % 2 == 0)
                        return {3, "diagonal hook scaling", false,
                                "entry " + std::to_string(h) + " not an odd multiple of p"};
                ++checked;
            }
    return {3, "diagonal hook scaling", true, std::to_string(checked) + " cases, exact"};
}

/// 4. Combinatorial p'-criterion matches exact big-integer divisibility of
/// the degree, for every partition of n = w*p, w < p, p in {3,5,7}.
inline CriterionResult criterion_pprime_degree(const Options& opt) {
    long long checked = 0;
    std::string fail;
    for (int p : detail::primes()) {
        for (int w = 1; w < p && fail.empty(); ++w) {
            const int n = w * p;
            if (opt.quick && n > 21) continue;
            const auto all = enumerate_partitions(n);
            std::vector<std::uint8_t> ok(all.size(), 1);
            parallel_for_index(all.size(), [&](std::size_t i) {
                const bool combinatorial = macdonald_pprime(all[i], p);
                const bool coprime = degree(all[i]) % p != 0;
                if (combinatorial != coprime) ok[i] = 0;
            });
            checked += static_cast<long long>(all.size());
            for (std::size_t i = 0; i < ok.size(); ++i)
                if (!ok[i]) {
                    fail = "lambda=" + partition_string(all[i]) + " p=" + std::to_string(p);
                    break;
                }
        }
    }
    return {4, "p'-degree criterion vs exact degree", fail.empty(),
            fail.empty() ? std::to_string(checked) + " labels, big-integer exact" : fail};
}

/// 5. The radicand and epsilon identities behind the value match: for every
/// self-conjugate middle component q of size w < p,
///   eps_lambda * prod(delta) = (eps_p * p)^d * eps_local * prod(eta)
///   eps_lambda = eps_local * eps_p^d, with eps_local = (-1)^((w-d)/2).
inline CriterionResult criterion_epsilon_identities(const Options& opt) {
    long long checked = 0;
    for (int p : detail::primes())
        for (int w = 1; w < p; ++w)
            for (const auto& q : enumerate_self_conjugate(w)) {
                std::vector<Partition> comps(p);
                comps[middle_index(p)] = q;
                const Partition lam = from_core_quotient(CoreQuotient{p, Partition{}, comps});
                const auto eta = diagonal_hooks(q);
                const int d = static_cast<int>(eta.size());
                int eps_loc = epsilon_local(q);
                if (opt.corrupt_epsilon) eps_loc = -eps_loc;
                const int eps_lam = epsilon_lambda(lam);

                long long lhs = eps_lam;
                for (int h : diagonal_hooks(lam)) lhs *= h;
                long long rhs = eps_loc;
                for (int h : eta) rhs *= h;
                for (int j = 0; j < d; ++j) rhs *= static_cast<long long>(epsilon_p(p)) * p;

                int eps_pd = 1;
                for (int j = 0; j < d; ++j) eps_pd *= epsilon_p(p);
                if (lhs != rhs || eps_lam != eps_loc * eps_pd)
                    return {5, "radicand and epsilon identities", false,
                            "q=" + partition_string(q) + " p=" + std::to_string(p)};
                ++checked;
            }
    return {5, "radicand and epsilon identities", true,
            std::to_string(checked) + " p-singular cases, exact"};
}

/// 6. Value-level bijection: global and local split differences are the same
/// exact quadratic value on every p-singular entry, hence the bijection
/// commutes with every sigma (e in {0,1,2}, k over all units).
inline CriterionResult criterion_value_bijection(const Options&) {
    long long entries = 0, runs = 0;
    for (int p : detail::primes())
        for (int w = 1; w < p; ++w) {
            for (const auto& entry : psingular_chars(p, w)) {
                ++entries;
                if (!entry.split) continue;
                if (split_difference_value(entry.lambda) !=
                    local_difference_value(entry.Lambda.components, p))
                    return {6, "value-level bijection and commutation", false,
                            "lambda=" + partition_string(entry.lambda) +
                                " p=" + std::to_string(p)};
            }
            for (const auto& sigma : detail::sigma_grid(p)) {
                ++runs;
                if (!verify_commutation(p, w, sigma).pass)
                    return {6, "value-level bijection and commutation", false,
                            "p=" + std::to_string(p) + " w=" + std::to_string(w) + " " +
                                sigma_string(sigma)};
            }
        }
    return {6, "value-level bijection and commutation", true,
            std::to_string(entries) + " entries, " + std::to_string(runs) + " sigma runs"};
}

/// 7. Symbolic Galois sign agrees with the numeric Gauss-sum oracle for all
/// odd squarefree |D| <= 200, p in {3,5,7}, e in 0..4, every unit k.
inline CriterionResult criterion_galois_oracle(const Options& opt) {
    const int dmax = opt.quick ? 60 : 200;
    std::vector<long long> radicands;
    for (long long m = 1; m <= dmax; m += 2)
        if (decompose_radicand(m, 3).square == 1) {
            radicands.push_back(m);
            radicands.push_back(-m);
        }
    std::vector<std::uint8_t> ok(radicands.size(), 1);
    long long cases = 0;
    parallel_for_index(radicands.size(), [&](std::size_t i) {
        for (int p : detail::primes())
            for (int e = 0; e <= 4; ++e)
                for (int k = 1; k < p; ++k) {
                    const GaloisElement sigma(p, e, k);
                    if (galois_sign(sigma, radicands[i]) !=
                        oracles::gauss_sum_numeric(sigma, radicands[i])) {
                        ok[i] = 0;
                        return;
                    }
                }
    });
    for (int p : detail::primes()) cases += 5LL * (p - 1) * static_cast<long long>(radicands.size());
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i])
            return {7, "Galois sign vs numeric Gauss sums", false,
                    "D=" + std::to_string(radicands[i])};
    return {7, "Galois sign vs numeric Gauss sums", true,
            std::to_string(cases) + " cases, 100% agreement"};
}

/// 8. Exact first and second orthogonality of the alternating tables for
/// n in {3..7}, including the golden quadratic entries.
inline CriterionResult criterion_orthogonality(const Options&) {
    for (int n = 3; n <= 7; ++n)
        if (!oracles::orthogonality_holds(oracles::alt_table(n)))
            return {8, "character table orthogonality", false, "n=" + std::to_string(n)};

    // golden irrationalities: (-1 +- sqrt(-3))/2 at n = 3 and 4, (1 +- sqrt(5))/2 at n = 5
    struct Golden {
        int n;
        Partition label;
        int eps;
        long long D;
    };
    const std::vector<Golden> goldens = {{3, Partition{2, 1}, -1, -3},
                                         {4, Partition{2, 2}, -1, -3},
                                         {5, Partition{3, 1, 1}, 1, 5}};
    for (const auto& g : goldens) {
        const auto t = oracles::alt_table(g.n);
        bool seen = false;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (t.rows[r].kind != RestrictKind::Split || t.rows[r].label != g.label ||
                t.rows[r].sign != +1)
                continue;
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                if (!t.classes[c].split ||
                    t.classes[c].type.parts() != splitting_class_of(g.label))
                    continue;
                const auto expected =
                    QuadraticValue::half(g.eps, t.classes[c].sign == +1 ? 1 : -1, g.D);
                if (t.values[r][c] != expected)
                    return {8, "character table orthogonality", false,
                            "golden value mismatch at n=" + std::to_string(g.n)};
                seen = true;
            }
        }
        if (!seen)
            return {8, "character table orthogonality", false,
                    "golden row missing at n=" + std::to_string(g.n)};
    }
    return {8, "character table orthogonality", true, "n in {3..7}, exact, goldens verified"};
}

/// 9. Counting: height-zero counts agree on both sides for every (p, w),
/// and sigma-fixed p-singular counts agree for every sigma in the grid.
/// Includes the pinned instances (3,1): 3=3, (5,1): 4=4, (5,1,k=2): 0=0,
/// (5,1,k=1): 2=2.
inline CriterionResult criterion_counting(const Options& opt) {
    long long points = 0, runs = 0;
    for (int p : detail::primes())
        for (int w = 1; w < p; ++w) {
            if (opt.quick && w * p > 21) continue;
            const auto mc = mckay_count(p, w);
            if (!mc.equal)
                return {9, "McKay and Navarro counts", false,
                        "count mismatch at p=" + std::to_string(p) + " w=" + std::to_string(w)};
            ++points;
            for (const auto& sigma : detail::sigma_grid(p)) {
                const auto nc = navarro_count_psingular(p, w, sigma);
                if (!nc.equal)
                    return {9, "McKay and Navarro counts", false,
                            "sigma-fixed mismatch at p=" + std::to_string(p) +
                                " w=" + std::to_string(w) + " " + sigma_string(sigma)};
                ++runs;
            }
        }

    if (mckay_count(3, 1).global_count != 3 || mckay_count(5, 1).global_count != 4)
        return {9, "McKay and Navarro counts", false, "pinned McKay instance mismatch"};
    const auto swapped = navarro_count_psingular(5, 1, GaloisElement(5, 0, 2));
    const auto fixed = navarro_count_psingular(5, 1, GaloisElement(5, 0, 1));
    if (swapped.global_fixed != 0 || swapped.local_fixed != 0 || fixed.global_fixed != 2 ||
        fixed.local_fixed != 2)
        return {9, "McKay and Navarro counts", false, "pinned Navarro instance mismatch"};
    return {9, "McKay and Navarro counts", true,
            std::to_string(points) + " grid points, " + std::to_string(runs) + " sigma runs"};
}

/// 10. Oracle cross-validation: the brute-force table count matches the
/// symbolic global count for (3,1), (5,1), (3,2); the border-strip oracle
/// matches the abacus on all partitions of n <= 16.
inline CriterionResult criterion_oracle_cross(const Options& opt) {
    const std::vector<std::pair<int, int>> points = {{3, 1}, {5, 1}, {3, 2}};
    for (auto [p, w] : points)
        for (const auto& sigma : detail::sigma_grid(p))
            if (oracles::brute_count_fixed_global(w * p, p, sigma) !=
                count_sigma_fixed_global(p, w, sigma))
                return {10, "oracle cross-validation", false,
                        "count mismatch at p=" + std::to_string(p) + " w=" + std::to_string(w) +
                            " " + sigma_string(sigma)};

    const int nmax = opt.quick ? 10 : 16;
    long long checked = 0;
    std::string fail;
    for (int n = 0; n <= nmax && fail.empty(); ++n) {
        const auto all = enumerate_partitions(n);
        std::vector<std::uint8_t> ok(all.size(), 1);
        parallel_for_index(all.size(), [&](std::size_t i) {
            for (int p : detail::primes()) {
                const auto a = core_quotient(all[i], p);
                const auto b = oracles::rim_hook_core_quotient(all[i], p);
                if (a.core != b.core || a.quotient != b.quotient) {
                    ok[i] = 0;
                    return;
                }
            }
        });
        checked += static_cast<long long>(all.size());
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) {
                fail = "lambda=" + partition_string(all[i]);
                break;
            }
    }
    if (!fail.empty()) return {10, "oracle cross-validation", false, fail};
    return {10, "oracle cross-validation", true,
            std::to_string(checked) + " core/quotient cases + brute sigma counts"};
}

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    return {criterion_roundtrip(opt),         criterion_duality(opt),
            criterion_diagonal_scaling(opt),  criterion_pprime_degree(opt),
            criterion_epsilon_identities(opt), criterion_value_bijection(opt),
            criterion_galois_oracle(opt),     criterion_orthogonality(opt),
            criterion_counting(opt),          criterion_oracle_cross(opt)};
}

}  // namespace navlab::selftest
