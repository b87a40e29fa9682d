#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "navlab/galois.hpp"
#include "navlab/global_chars.hpp"
#include "navlab/local_chars.hpp"
#include "navlab/partition.hpp"

namespace navlab {

/// "4,2,1"; the empty partition prints as the empty string.
inline std::string partition_string(const Partition& lam) {
    std::string out;
    for (int i = 1; i <= lam.rows(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(lam.row(i));
    }
    return out;
}

/// Accepts "4,2,1"; "" and "0" denote the empty partition.
inline Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: bad part '" + item + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("parse_partition: bad part '" + item + "'");
        parts.push_back(value);
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_partition: '" + text +
                                    "' is not weakly decreasing positive");
    }
}

inline std::string cycle_type_string(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

/// "split:2,1:+" or "nonsplit:3,1|2,1,1".
inline std::string alt_char_string(const AltChar& c) {
    if (c.kind == RestrictKind::Split)
        return "split:" + partition_string(c.label) + (c.sign > 0 ? ":+" : ":-");
    return "nonsplit:" + partition_string(c.label) + "|" + partition_string(c.label_conj);
}

/// "tau=|Lambda=∅;1;∅" with empty components shown as ∅.
inline std::string local_label_string(const LocalLabel& L) {
    std::string out = "tau=" + partition_string(L.core) + "|Lambda=";
    for (std::size_t g = 0; g < L.components.size(); ++g) {
        if (g) out += ';';
        out += L.components[g].empty() ? "∅" : partition_string(L.components[g]);
    }
    return out;
}

/// "p=5,e=1,k=2".
inline std::string sigma_string(const GaloisElement& sigma) {
    return "p=" + std::to_string(sigma.p) + ",e=" + std::to_string(sigma.e) +
           ",k=" + std::to_string(sigma.k);
}

}  // namespace navlab
