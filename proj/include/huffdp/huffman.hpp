#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "huffdp/frequency.hpp"

namespace huffdp {

struct CodeEntry {
    std::string bits;          // '0'/'1' path from root, left = 0
    std::uint32_t length = 0;  // node depth I_dn
};

// Prefix-free codebook plus the tree metadata the leveling step needs.
struct HuffmanCodebook {
    std::map<double, CodeEntry> codes;
    std::uint32_t min_length = 0;  // F_dn, shortest code over all values
    std::size_t tree_size = 0;     // total node count

    const CodeEntry& at(double value) const;
    bool contains(double value) const { return codes.find(value) != codes.end(); }
    std::size_t size() const { return codes.size(); }
};

// Greedy minimum-redundancy construction over a min-queue keyed by
// (weight, creation order). Equal weights pop FIFO, so the same table always
// yields the same tree bit-for-bit. The first-extracted node becomes the
// left child (bit 0). A single-symbol table gets the one-node convention:
// code "0" of length 1.
HuffmanCodebook build_tree(const FrequencyTable& freq);

// Sum over values of count * code length.
double weighted_code_length(const FrequencyTable& freq, const HuffmanCodebook& book);

}  // namespace huffdp
