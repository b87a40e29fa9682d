#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "navlab/arith.hpp"
#include "navlab/core_quotient.hpp"
#include "navlab/global_chars.hpp"
#include "navlab/partition.hpp"
#include "navlab/quadratic.hpp"

namespace navlab {

/// Shape of the Sylow normalizer H = S(Pi0) x (Y wr S(Omega)) for
/// n = n0 + w*p: the defect group is elementary abelian of order p^w,
/// which forces w < p.
struct NormalizerShape {
    int p = 3;
    int n0 = 0;
    int w = 0;

    NormalizerShape(int p_, int n0_, int w_) : p(p_), n0(n0_), w(w_) {
        if (!is_odd_prime(p)) throw std::domain_error("NormalizerShape: p must be an odd prime");
        if (n0 < 0 || w < 0) throw std::domain_error("NormalizerShape: sizes must be nonnegative");
        if (w >= p) throw std::domain_error("NormalizerShape: abelian defect requires w < p");
    }

    int n() const { return n0 + w * p; }
};

/// Label of an irreducible character of H: a p-core for the symmetric part
/// and a p-tuple of partitions (one per character of Y) of total size w.
struct LocalLabel {
    Partition core;                     // the defect-zero S(Pi0) label
    std::vector<Partition> components;  // exactly p, total size w

    int weight() const {
        int w = 0;
        for (const auto& c : components) w += c.n();
        return w;
    }

    auto operator<=>(const LocalLabel&) const = default;
};

/// Duality on mappings: component gamma of the dual is the conjugate of
/// component p-1-gamma. An involution.
inline std::vector<Partition> dual_mapping(const std::vector<Partition>& components) {
    const int p = static_cast<int>(components.size());
    std::vector<Partition> out(p);
    for (int g = 0; g < p; ++g) out[g] = conjugate(components[p - 1 - g]);
    return out;
}

inline LocalLabel dual_label(const LocalLabel& L) {
    return LocalLabel{conjugate(L.core), dual_mapping(L.components)};
}

/// Splitting criterion: the character splits on the even part of H exactly
/// when the mapping is self-dual, which forces the middle component to be
/// self-conjugate.
inline bool is_splitting_mapping(const std::vector<Partition>& components) {
    return components == dual_mapping(components);
}

/// Tensoring with the sign character of H sends a label to its dual; on the
/// even part the two restrictions coincide.
inline LocalLabel sign_twist(const LocalLabel& L) { return dual_label(L); }

/// (-1)^((w-d)/2) for a self-conjugate component of size w with d diagonal
/// hooks. Chosen so that epsilon of the rebuilt global label factors as
/// epsilon_local * epsilon_p^d.
inline int epsilon_local(const Partition& q) {
    if (!is_self_conjugate(q))
        throw std::domain_error("epsilon_local: component must be self-conjugate");
    const int w = q.n();
    const int d = static_cast<int>(diagonal_hooks(q).size());
    return (w - d) / 2 % 2 == 0 ? 1 : -1;
}

/// (-1)^((p-1)/2): the sign making epsilon_p * p the discriminant-friendly
/// twist of p.
inline int epsilon_p(int p) {
    if (!is_odd_prime(p)) throw std::domain_error("epsilon_p: p must be an odd prime");
    return (p - 1) / 2 % 2 == 0 ? 1 : -1;
}

namespace detail {

inline const Partition& psingular_middle(const std::vector<Partition>& components, int p) {
    if (static_cast<int>(components.size()) != p)
        throw std::domain_error("local mapping must have exactly p components");
    const int mid = middle_index(p);
    for (int g = 0; g < p; ++g)
        if (g != mid && !components[g].empty())
            throw std::domain_error("mapping must equal its p-singular part");
    if (components[mid].empty())
        throw std::domain_error("mapping must equal its p-singular part");
    return components[mid];
}

}  // namespace detail

/// Radicand of the local split difference for a p-singular splitting
/// mapping: (epsilon_p * p)^d * epsilon_local * product of the middle
/// component's diagonal hooks.
inline long long local_radicand(const std::vector<Partition>& components, int p) {
    if (!is_odd_prime(p)) throw std::domain_error("local_radicand: p must be an odd prime");
    const Partition& q = detail::psingular_middle(components, p);
    if (!is_self_conjugate(q))
        throw std::domain_error("local_radicand: middle component must be self-conjugate");
    const auto eta = diagonal_hooks(q);
    const int d = static_cast<int>(eta.size());
    long long rad = epsilon_local(q);
    for (int h : eta) rad *= h;
    long long twist = static_cast<long long>(epsilon_p(p)) * p;
    for (int j = 0; j < d; ++j) rad *= twist;
    return rad;
}

/// Value of psi+ - psi- on the positive half of its splitting class; zero
/// elsewhere on the even part of H.
inline QuadraticValue local_difference_value(const std::vector<Partition>& components, int p) {
    return QuadraticValue::sqrt_of(local_radicand(components, p));
}

/// Degree of the character labeled (core, components). The Y-character at
/// index gamma is linear for gamma < p-1 and has degree p-1 at gamma = p-1.
/// Always coprime to p when the weight is below p.
inline BigInt local_degree(const LocalLabel& L) {
    const int p = static_cast<int>(L.components.size());
    std::vector<int> sizes;
    for (const auto& c : L.components) sizes.push_back(c.n());
    BigInt result = degree(L.core) * multinomial(L.weight(), sizes);
    for (int g = 0; g < p; ++g) {
        result *= degree(L.components[g]);
        if (g == p - 1)
            for (int j = 0; j < L.components[g].n(); ++j) result *= (p - 1);
    }
    return result;
}

/// All labels with the given symmetric part: every p-tuple of partitions of
/// total size w, in a fixed order (sizes assigned left to right, largest
/// first; partitions of each size in enumeration order).
inline std::vector<LocalLabel> enumerate_local_labels(const NormalizerShape& shape,
                                                      const Partition& tau) {
    if (tau.n() != shape.n0)
        throw std::domain_error("enumerate_local_labels: tau must be a partition of n0");
    if (!is_p_core(tau, shape.p))
        throw std::domain_error("enumerate_local_labels: tau must be a p-core");
    std::vector<LocalLabel> out;
    std::vector<Partition> comps(shape.p);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == shape.p - 1) {
            for (const auto& q : enumerate_partitions(remaining)) {
                comps[idx] = q;
                out.push_back(LocalLabel{tau, comps});
            }
            comps[idx] = Partition{};
            return;
        }
        for (int s = remaining; s >= 0; --s) {
            for (const auto& q : enumerate_partitions(s)) {
                comps[idx] = q;
                self(self, idx + 1, remaining - s);
            }
        }
        comps[idx] = Partition{};
    };
    rec(rec, 0, shape.w);
    return out;
}

/// A character of the even part of H, by restriction: shared by a dual pair
/// of labels, or one member of the split pair of a self-dual label.
struct LocalAltChar {
    RestrictKind kind = RestrictKind::NonSplit;
    LocalLabel label;  // split: the self-dual label; else the lex-greater of the pair
    LocalLabel dual;   // the partner (equal to label when split)
    int sign = +1;     // meaningful only when split

    auto operator<=>(const LocalAltChar&) const = default;
};

inline std::vector<LocalAltChar> restrict_local(const LocalLabel& L) {
    const LocalLabel d = dual_label(L);
    if (L == d)
        return {LocalAltChar{RestrictKind::Split, L, L, +1},
                LocalAltChar{RestrictKind::Split, L, L, -1}};
    LocalAltChar c;
    c.kind = RestrictKind::NonSplit;
    c.label = std::max(L, d);
    c.dual = std::min(L, d);
    return {c};
}

}  // namespace navlab
