#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "navlab/arith.hpp"
#include "navlab/partition.hpp"

namespace navlab {

/// p-core plus normalized p-quotient of a partition. The quotient indices
/// run 0..p-1 and the normalization is pinned by the abacus convention
/// below, so that conjugating the partition conjugates the core and sends
/// quotient component i to the conjugate of component p-1-i.
struct CoreQuotient {
    int p = 3;
    Partition core;
    std::vector<Partition> quotient;  // exactly p components

    int weight() const {
        int w = 0;
        for (const auto& q : quotient) w += q.n();
        return w;
    }
};

/// The middle quotient position p* = (p-1)/2.
inline int middle_index(int p) { return (p - 1) / 2; }

inline bool is_p_core(const Partition& lam, int p) {
    for (int h : hook_lengths(lam))
        if (h % p == 0) return false;
    return true;
}

namespace detail {

// Bead count per runner for the beta-set of lam taken at size b.
inline std::vector<int> runner_counts(const Partition& lam, int p, int b) {
    std::vector<int> counts(p, 0);
    for (int x : beta_set(lam, b).entries) ++counts[x % p];
    return counts;
}

}  // namespace detail

/// Core and quotient via the abacus. The beta-set size is always a multiple
/// of p; runner gamma holds the beads congruent to gamma, sliding them down
/// yields the core, and the bead rows on runner gamma are the beta-set of
/// quotient component gamma.
inline CoreQuotient core_quotient(const Partition& lam, int p) {
    if (!is_odd_prime(p)) throw std::domain_error("core_quotient: p must be an odd prime");
    const int b = p * ((std::max(lam.rows(), 1) + p - 1) / p);
    std::vector<std::vector<int>> runner_rows(p);
    for (int x : beta_set(lam, b).entries) runner_rows[x % p].push_back(x / p);

    CoreQuotient cq;
    cq.p = p;
    for (int r = 0; r < p; ++r) cq.quotient.push_back(partition_from_beta(runner_rows[r]));

    std::vector<int> slid;
    for (int r = 0; r < p; ++r)
        for (int j = 0; j < static_cast<int>(runner_rows[r].size()); ++j)
            slid.push_back(r + p * j);
    std::sort(slid.rbegin(), slid.rend());
    cq.core = partition_from_beta(slid);
    return cq;
}

/// Rebuilds the unique partition with the given core and quotient.
/// Exact inverse of core_quotient.
inline Partition from_core_quotient(const CoreQuotient& cq) {
    const int p = cq.p;
    if (!is_odd_prime(p)) throw std::domain_error("from_core_quotient: p must be an odd prime");
    if (static_cast<int>(cq.quotient.size()) != p)
        throw std::domain_error("from_core_quotient: quotient must have exactly p components");
    if (!is_p_core(cq.core, p))
        throw std::domain_error("from_core_quotient: core contains a p-hook");

    int need = 0;
    for (const auto& q : cq.quotient) need = std::max(need, q.rows());

    int b = p * ((std::max(cq.core.rows(), 1) + p - 1) / p);
    auto counts = detail::runner_counts(cq.core, p, b);
    int mincount = *std::min_element(counts.begin(), counts.end());
    if (mincount < need) {
        b += p * (need - mincount);  // one extra row of beads per deficit
        counts = detail::runner_counts(cq.core, p, b);
    }

    std::vector<int> beads;
    for (int r = 0; r < p; ++r)
        for (int row : beta_set(cq.quotient[r], counts[r]).entries)
            beads.push_back(p * row + r);
    std::sort(beads.rbegin(), beads.rend());
    return partition_from_beta(beads);
}

/// A quotient is p-singular when it is concentrated in the middle component:
/// the component at p* is nonempty and every other one is empty.
inline bool is_p_singular(const CoreQuotient& cq) {
    const int mid = middle_index(cq.p);
    for (int r = 0; r < static_cast<int>(cq.quotient.size()); ++r)
        if (r != mid && !cq.quotient[r].empty()) return false;
    return !cq.quotient[mid].empty();
}

/// p'-degree test. In the abelian-defect setting n = w*p with w < p this is
/// the combinatorial criterion "empty p-core"; for other n it falls back to
/// the valuation of the degree.
inline bool macdonald_pprime(const Partition& lam, int p) {
    if (!is_odd_prime(p)) throw std::domain_error("macdonald_pprime: p must be an odd prime");
    const int n = lam.n();
    if (n % p == 0 && n / p < p) return core_quotient(lam, p).core.empty();
    return p_valuation_of_degree(lam, p) == 0;
}

/// Diagonal hooks of the partition rebuilt from an empty core and a quotient
/// concentrated at p*: they are exactly p times the diagonal hooks of the
/// middle component. Requires the component to be self-conjugate.
inline std::vector<int> diagonal_from_quotient(const Partition& q, int p) {
    if (!is_odd_prime(p))
        throw std::domain_error("diagonal_from_quotient: p must be an odd prime");
    if (!is_self_conjugate(q))
        throw std::domain_error("diagonal_from_quotient: component must be self-conjugate");
    std::vector<int> out = diagonal_hooks(q);
    for (int& h : out) h *= p;
    return out;
}

}  // namespace navlab
