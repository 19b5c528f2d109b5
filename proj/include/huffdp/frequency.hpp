#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace huffdp {

// Distinct values with occurrence counts. Entries are kept sorted ascending
// by value, so iteration order is deterministic regardless of how the table
// was fed.
class FrequencyTable {
public:
    using Entry = std::pair<double, std::uint64_t>;

    static FrequencyTable from_stream(std::span<const double> stream);

    // Entries may arrive in any order; values must be distinct, counts >= 1.
    static FrequencyTable from_counts(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint64_t total() const { return total_; }
    std::size_t distinct() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

}  // namespace huffdp
