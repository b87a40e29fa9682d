#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "navlab/core_quotient.hpp"
#include "navlab/partition.hpp"
#include "navlab/quadratic.hpp"

namespace navlab {

enum class RestrictKind { NonSplit, Split };

/// An irreducible character of the alternating group, as a restriction from
/// the symmetric group: either the common restriction of two mutually
/// conjugate labels, or one member of the pair a self-conjugate label splits
/// into.
struct AltChar {
    RestrictKind kind = RestrictKind::NonSplit;
    Partition label;       // split: the self-conjugate label; else the lex-greater member
    Partition label_conj;  // the partner (equal to label when split)
    int sign = +1;         // +1 or -1, meaningful only when split

    bool operator==(const AltChar&) const = default;
};

/// Restriction dichotomy: a non-self-conjugate label restricts to a single
/// character shared with its conjugate; a self-conjugate label splits into
/// a pair of conjugate characters.
inline std::vector<AltChar> restrict_to_alt(const Partition& lam) {
    const Partition conj = conjugate(lam);
    if (lam == conj)
        return {AltChar{RestrictKind::Split, lam, lam, +1},
                AltChar{RestrictKind::Split, lam, lam, -1}};
    AltChar c;
    c.kind = RestrictKind::NonSplit;
    c.label = std::max(lam, conj);
    c.label_conj = std::min(lam, conj);
    return {c};
}

/// (-1)^((n-d)/2) for a self-conjugate label with d diagonal hooks.
inline int epsilon_lambda(const Partition& lam) {
    if (!is_self_conjugate(lam))
        throw std::domain_error("epsilon_lambda: label must be self-conjugate");
    const int n = lam.n();
    const int d = static_cast<int>(diagonal_hooks(lam).size());
    return (n - d) / 2 % 2 == 0 ? 1 : -1;
}

/// Radicand of the split difference: epsilon * product of diagonal hooks.
/// Always odd and nonzero.
inline long long split_radicand(const Partition& lam) {
    long long prod = epsilon_lambda(lam);
    for (int h : diagonal_hooks(lam)) prod *= h;
    return prod;
}

/// Value of chi+ - chi- on the positive half of its splitting class:
/// sqrt(epsilon * prod of diagonal hooks). The difference vanishes on every
/// other class.
inline QuadraticValue split_difference_value(const Partition& lam) {
    return QuadraticValue::sqrt_of(split_radicand(lam));
}

/// The two values (epsilon +- sqrt(radicand))/2 taken by chi+- on the
/// matching and opposite halves of the splitting class.
inline std::pair<QuadraticValue, QuadraticValue> split_pair_values(const Partition& lam) {
    const int eps = epsilon_lambda(lam);
    const long long D = split_radicand(lam);
    return {QuadraticValue::half(eps, 1, D), QuadraticValue::half(eps, -1, D)};
}

/// Cycle type of the class on which the split pair differs: the diagonal
/// hooks of the (self-conjugate) label.
inline std::vector<int> splitting_class_of(const Partition& lam) {
    return diagonal_hooks(lam);
}

struct SplittingClass {
    std::vector<int> cycle_type;  // odd, strictly decreasing, summing to n
    int sign = +1;
};

/// Labels of the p'-characters in the block with the given core and weight:
/// partitions of |core| + w*p with that p-core and p'-degree. The principal
/// abelian-defect block is core = empty.
inline std::vector<Partition> block_pprime_labels(int p, int w, const Partition& core) {
    if (!is_odd_prime(p))
        throw std::domain_error("block_pprime_labels: p must be an odd prime");
    if (!is_p_core(core, p))
        throw std::domain_error("block_pprime_labels: core is not a p-core");
    if (w < 0 || w >= p)
        throw std::domain_error("block_pprime_labels: abelian defect requires 0 <= w < p");
    std::vector<Partition> out;
    for (const auto& lam : enumerate_partitions(core.n() + w * p))
        if (core_quotient(lam, p).core == core && macdonald_pprime(lam, p))
            out.push_back(lam);
    return out;
}

}  // namespace navlab
