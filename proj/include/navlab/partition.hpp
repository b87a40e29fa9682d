#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace navlab {

using BigInt = boost::multiprecision::cpp_int;

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. Immutable value type; trailing
/// zeros in the input are stripped so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Length of the i-th row, 1-based; rows below the diagram have length 0.
    int row(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }

    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Length of the j-th column, 1-based.
inline int column_length(const Partition& lam, int col) {
    int count = 0;
    for (int i = 1; i <= lam.rows(); ++i)
        if (lam.row(i) >= col) ++count;
    return count;
}

/// Transpose of the diagram.
inline Partition conjugate(const Partition& lam) {
    std::vector<int> cols;
    for (int j = 1; j <= lam.row(1); ++j) cols.push_back(column_length(lam, j));
    return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lam) { return lam == conjugate(lam); }

struct Hook {
    int row = 0, col = 0;   // 1-based node coordinates
    int arm = 0, leg = 0;
    int length() const { return arm + leg + 1; }
};

inline Hook hook_at(const Partition& lam, int row, int col) {
    if (row < 1 || row > lam.rows() || col < 1 || col > lam.row(row))
        throw std::domain_error("hook_at: node outside the diagram");
    return Hook{row, col, lam.row(row) - col, column_length(lam, col) - row};
}

/// Hook lengths at the diagonal nodes (1,1), (2,2), ... For self-conjugate
/// partitions these are odd, strictly decreasing, and determine the shape.
inline std::vector<int> diagonal_hooks(const Partition& lam) {
    std::vector<int> out;
    for (int j = 1; lam.row(j) >= j; ++j) out.push_back(hook_at(lam, j, j).length());
    return out;
}

inline std::vector<int> hook_lengths(const Partition& lam) {
    std::vector<int> out;
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.row(i); ++j) out.push_back(hook_at(lam, i, j).length());
    return out;
}

/// Beta-set of a fixed size: entries[i] = part_i + (size - i), 1-based, padded
/// with the staircase size - i for missing rows. Strictly decreasing.
struct BetaSet {
    std::vector<int> entries;
    int size() const { return static_cast<int>(entries.size()); }
};

inline BetaSet beta_set(const Partition& lam, int size) {
    if (size < lam.rows())
        throw std::domain_error("beta_set: size smaller than the number of parts");
    BetaSet b;
    for (int i = 1; i <= size; ++i) b.entries.push_back(lam.row(i) + (size - i));
    return b;
}

/// Inverse of beta_set: entries must be strictly decreasing and nonnegative.
inline Partition partition_from_beta(const std::vector<int>& entries_desc) {
    const int size = static_cast<int>(entries_desc.size());
    std::vector<int> parts;
    for (int i = 1; i <= size; ++i) {
        int part = entries_desc[i - 1] - (size - i);
        if (part < 0) throw std::invalid_argument("partition_from_beta: bad beta-set");
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

/// All partitions of n in lexicographically decreasing order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Complete and duplicate-free.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::domain_error("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(Partition(prefix));
            return;
        }
        for (int part = std::min(maxpart, remaining); part >= 1; --part) {
            prefix.push_back(part);
            self(self, remaining - part, part);
            prefix.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> enumerate_self_conjugate(int n) {
    std::vector<Partition> out;
    for (const auto& lam : enumerate_partitions(n))
        if (is_self_conjugate(lam)) out.push_back(lam);
    return out;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt multinomial(int total, const std::vector<int>& sizes) {
    BigInt result = factorial(total);
    int sum = 0;
    for (int s : sizes) {
        result /= factorial(s);
        sum += s;
    }
    if (sum != total) throw std::domain_error("multinomial: sizes do not sum to total");
    return result;
}

/// Character degree by the hook length formula, n! / prod(hooks). Exact.
inline BigInt degree(const Partition& lam) {
    BigInt hooks = 1;
    for (int h : hook_lengths(lam)) hooks *= h;
    return factorial(lam.n()) / hooks;
}

/// Exponent of the prime p in degree(lam), via Legendre's formula for n!
/// minus the hook valuations. No big-integer arithmetic involved.
inline int p_valuation_of_degree(const Partition& lam, int p) {
    if (p < 2) throw std::domain_error("p_valuation_of_degree: p must be a prime");
    int v = 0;
    for (long long q = p; q <= lam.n(); q *= p) v += lam.n() / static_cast<int>(q);
    for (int h : hook_lengths(lam))
        while (h % p == 0) {
            --v;
            h /= p;
        }
    return v;
}

}  // namespace navlab
