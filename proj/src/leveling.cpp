#include "huffdp/leveling.hpp"

#include <algorithm>
#include <stdexcept>

namespace huffdp {

std::string_view to_string(PrivacyLabel label) {
    switch (label) {
        case PrivacyLabel::Low: return "Low";
        case PrivacyLabel::Medium: return "Medium";
        case PrivacyLabel::High: return "High";
    }
    return "Low";
}

PrivacyLabel required_privacy_label(int level) {
    if (level < 1) {
        throw std::invalid_argument("invalid level");
    }
    if (level == 1) return PrivacyLabel::Low;
    if (level <= 3) return PrivacyLabel::Medium;
    return PrivacyLabel::High;
}

const LevelInfo& LevelAssignment::at(double value) const {
    auto it = values.find(value);
    if (it == values.end()) {
        throw std::invalid_argument("value not assigned");
    }
    return it->second;
}

LevelAssignment assign_levels(const HuffmanCodebook& book, int l_max) {
    if (book.codes.empty()) {
        throw std::invalid_argument("empty input");
    }
    if (l_max < 1) {
        throw std::invalid_argument("invalid l_max");
    }

    LevelAssignment assignment;
    assignment.l_max = l_max;
    const std::uint32_t shift = book.min_length - 1;
    for (const auto& [value, entry] : book.codes) {
        LevelInfo info;
        info.raw_depth = entry.length;
        info.effective_depth = entry.length - shift;
        info.level = std::min(static_cast<int>(info.effective_depth), l_max);
        assignment.values[value] = info;
    }
    return assignment;
}

}  // namespace huffdp
