#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "navlab/core_quotient.hpp"
#include "navlab/galois.hpp"
#include "navlab/global_chars.hpp"
#include "navlab/local_chars.hpp"
#include "navlab/partition.hpp"

namespace navlab {

/// The block bijection at label level: a partition goes to its p-core paired
/// with its normalized p-quotient.
inline LocalLabel fong_map(const Partition& lam, int p) {
    CoreQuotient cq = core_quotient(lam, p);
    return LocalLabel{std::move(cq.core), std::move(cq.quotient)};
}

/// Induced map on restrictions: non-split restrictions go to non-split
/// restrictions of the dual pair of local labels, split pairs to split pairs
/// with matched sign.
inline LocalAltChar f_plus(const AltChar& chr, int p) {
    if (chr.kind == RestrictKind::NonSplit) {
        const LocalLabel a = fong_map(chr.label, p);
        const LocalLabel b = fong_map(chr.label_conj, p);
        if (b != dual_label(a))
            throw std::logic_error("f_plus: conjugate labels did not map to a dual pair");
        LocalAltChar out;
        out.kind = RestrictKind::NonSplit;
        out.label = std::max(a, b);
        out.dual = std::min(a, b);
        return out;
    }
    const LocalLabel L = fong_map(chr.label, p);
    if (L != dual_label(L))
        throw std::logic_error("f_plus: self-conjugate label did not map to a self-dual one");
    return LocalAltChar{RestrictKind::Split, L, L, chr.sign};
}

/// One matched pair of restrictions under the bijection, with the radicands
/// of both split differences when the entry splits.
struct CorrespondenceEntry {
    bool split = false;
    Partition lambda, lambda_conj;   // equal when split
    LocalLabel Lambda, Lambda_dual;  // equal when split
    std::optional<long long> D_global, D_local;
};

/// All p-singular p'-entries of the principal block with n = w*p: global
/// labels with empty core and quotient concentrated in the middle component,
/// matched with the corresponding local labels. One entry per restriction.
inline std::vector<CorrespondenceEntry> psingular_chars(int p, int w) {
    if (!is_odd_prime(p)) throw std::domain_error("psingular_chars: p must be an odd prime");
    if (w < 0 || w >= p) throw std::domain_error("psingular_chars: defect not abelian (w >= p)");

    std::vector<CorrespondenceEntry> out;
    const int mid = middle_index(p);
    for (const auto& q : enumerate_partitions(w)) {
        if (q.empty()) continue;  // the empty middle component is not p-singular
        const Partition qc = conjugate(q);
        if (q < qc) continue;  // pair handled at its lex-greater member

        std::vector<Partition> comps(p);
        comps[mid] = q;
        const LocalLabel L{Partition{}, comps};
        const Partition lam = from_core_quotient(CoreQuotient{p, Partition{}, comps});

        CorrespondenceEntry entry;
        if (q == qc) {
            entry.split = true;
            entry.lambda = entry.lambda_conj = lam;
            entry.Lambda = entry.Lambda_dual = L;
            entry.D_global = split_radicand(lam);
            entry.D_local = local_radicand(comps, p);
        } else {
            entry.split = false;
            entry.lambda = lam;
            entry.lambda_conj = conjugate(lam);
            entry.Lambda = L;
            entry.Lambda_dual = dual_label(L);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

/// The radicand identity behind the value-level match: for a self-conjugate
/// p-singular label, epsilon * prod(diagonal hooks) computed globally equals
/// (epsilon_p * p)^d * epsilon_local * prod(middle diagonal hooks).
inline bool radicand_identity_check(const Partition& lam, int p) {
    if (!is_self_conjugate(lam))
        throw std::domain_error("radicand_identity_check: label must be self-conjugate");
    const CoreQuotient cq = core_quotient(lam, p);
    if (!cq.core.empty() || !is_p_singular(cq))
        throw std::domain_error("radicand_identity_check: label must be p-singular with empty core");
    return split_radicand(lam) == local_radicand(cq.quotient, p);
}

struct EntryVerdict {
    CorrespondenceEntry entry;
    PairAction status = PairAction::Fixed;  // Fixed for non-split entries
    bool pass = false;
};

struct CommutationReport {
    int p = 3, w = 0;
    GaloisElement sigma;
    std::vector<EntryVerdict> entries;
    bool pass = true;
};

/// Checks that applying sigma then the bijection equals the bijection then
/// sigma on every p-singular entry: non-split entries are fixed on both
/// sides; split entries must be fixed on both sides or swapped on both.
inline CommutationReport verify_commutation(int p, int w, const GaloisElement& sigma) {
    CommutationReport report{p, w, sigma, {}, true};
    for (auto& entry : psingular_chars(p, w)) {
        EntryVerdict v;
        if (entry.split) {
            const PairAction global = act_on_pair(sigma, *entry.D_global);
            const PairAction local = act_on_pair(sigma, *entry.D_local);
            v.status = global;
            v.pass = global == local;
        } else {
            v.status = PairAction::Fixed;
            v.pass = is_fixed_nonsplit(Side::Global) && is_fixed_nonsplit(Side::Local);
        }
        v.entry = std::move(entry);
        report.pass = report.pass && v.pass;
        report.entries.push_back(std::move(v));
    }
    return report;
}

/// Global p'-restrictions of the principal block with their split radicands,
/// ready for sigma-fixed counting. One item per character of the alternating
/// group.
inline std::vector<CountedChar> global_pprime_counted_chars(int p, int w) {
    if (!is_odd_prime(p)) throw std::domain_error("counted chars: p must be an odd prime");
    if (w < 0 || w >= p) throw std::domain_error("counted chars: defect not abelian (w >= p)");
    std::vector<CountedChar> out;
    for (const auto& lam : enumerate_partitions(w * p)) {
        if (!macdonald_pprime(lam, p)) continue;
        const Partition conj = conjugate(lam);
        if (lam == conj) {
            out.push_back(CountedChar{true, split_radicand(lam)});
        } else if (lam > conj) {
            out.push_back(CountedChar{false, 0});
        }
    }
    return out;
}

struct McKayCount {
    long long global_count = 0;
    long long local_count = 0;
    bool equal = false;
};

/// Height-zero counts on the alternating side, computed independently:
/// globally by the p'-degree criterion over partitions of w*p, locally by
/// enumerating normalizer labels. Each non-split pair contributes one
/// character, each split label two.
inline McKayCount mckay_count(int p, int w) {
    if (!is_odd_prime(p)) throw std::domain_error("mckay_count: p must be an odd prime");
    if (w < 0 || w >= p) throw std::domain_error("mckay_count: defect not abelian (w >= p)");

    long long total = 0, selfconj = 0;
    for (const auto& lam : enumerate_partitions(w * p)) {
        const bool combinatorial = macdonald_pprime(lam, p);
        const bool by_degree = p_valuation_of_degree(lam, p) == 0;
        if (combinatorial != by_degree)
            throw std::logic_error("mckay_count: p'-criteria disagree");
        if (!combinatorial) continue;
        ++total;
        if (is_self_conjugate(lam)) ++selfconj;
    }
    McKayCount out;
    out.global_count = (total - selfconj) / 2 + 2 * selfconj;

    long long ltotal = 0, lsplit = 0;
    const NormalizerShape shape(p, 0, w);
    for (const auto& L : enumerate_local_labels(shape, Partition{})) {
        ++ltotal;
        if (is_splitting_mapping(L.components)) ++lsplit;
    }
    out.local_count = (ltotal - lsplit) / 2 + 2 * lsplit;
    out.equal = out.global_count == out.local_count;
    return out;
}

struct NavarroCount {
    long long global_fixed = 0;
    long long local_fixed = 0;
    bool equal = false;
};

/// sigma-fixed counts over the p-singular p'-characters on both sides.
inline NavarroCount navarro_count_psingular(int p, int w, const GaloisElement& sigma) {
    NavarroCount out;
    for (const auto& entry : psingular_chars(p, w)) {
        if (entry.split) {
            out.global_fixed += act_on_pair(sigma, *entry.D_global) == PairAction::Fixed ? 2 : 0;
            out.local_fixed += act_on_pair(sigma, *entry.D_local) == PairAction::Fixed ? 2 : 0;
        } else {
            out.global_fixed += is_fixed_nonsplit(Side::Global) ? 1 : 0;
            out.local_fixed += is_fixed_nonsplit(Side::Local) ? 1 : 0;
        }
    }
    out.equal = out.global_fixed == out.local_fixed;
    return out;
}

/// Symbolic sigma-fixed count over all global p'-characters of the block.
inline long long count_sigma_fixed_global(int p, int w, const GaloisElement& sigma) {
    return count_sigma_fixed(global_pprime_counted_chars(p, w), sigma);
}

}  // namespace navlab
