#include "huffdp/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace huffdp {

FrequencyTable FrequencyTable::from_stream(std::span<const double> stream) {
    std::map<double, std::uint64_t> counts;
    for (double v : stream) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite value");
        }
        ++counts[v];
    }
    FrequencyTable table;
    table.entries_.reserve(counts.size());
    for (const auto& [value, count] : counts) {
        table.entries_.emplace_back(value, count);
        table.total_ += count;
    }
    return table;
}

FrequencyTable FrequencyTable::from_counts(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    FrequencyTable table;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [value, count] = entries[i];
        if (!std::isfinite(value)) {
            throw std::invalid_argument("non-finite value");
        }
        if (count == 0) {
            throw std::invalid_argument("count must be positive");
        }
        if (i > 0 && value == entries[i - 1].first) {
            throw std::invalid_argument("duplicate value");
        }
        table.total_ += count;
    }
    table.entries_ = std::move(entries);
    return table;
}

}  // namespace huffdp
