#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "huffdp/huffman.hpp"

namespace huffdp {

enum class PrivacyLabel { Low, Medium, High };

std::string_view to_string(PrivacyLabel label);

// Informational label only: level 1 is Low, 2-3 Medium, 4 and up High.
PrivacyLabel required_privacy_label(int level);

struct LevelInfo {
    std::uint32_t raw_depth = 0;        // I_dn, code length
    std::uint32_t effective_depth = 0;  // E_dn = I_dn - (F_dn - 1)
    int level = 0;                      // min(E_dn, l_max)
};

struct LevelAssignment {
    std::map<double, LevelInfo> values;
    int l_max = 5;

    const LevelInfo& at(double value) const;
};

// Normalizes node depths so the most frequent class sits at effective depth
// 1, then clamps to l_max.
LevelAssignment assign_levels(const HuffmanCodebook& book, int l_max = 5);

}  // namespace huffdp
