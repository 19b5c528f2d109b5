#include "huffdp/synthetic.hpp"

#include <stdexcept>

#include "huffdp/random.hpp"

namespace huffdp {

std::vector<double> table1_stream() {
    return {180, 124, 180, 167, 204, 180, 332, 180, 124, 180,
            167, 204, 180, 650, 180, 124, 167, 204, 332, 180};
}

std::vector<double> heavy_mode_stream(std::size_t instances, std::size_t distinct,
                                      std::uint64_t seed) {
    if (distinct < 1 || instances < distinct) {
        throw std::invalid_argument("need instances >= distinct >= 1");
    }

    // Each value occurs at least once; the mode takes 60% of the surplus and
    // the tail halves from there, remainder folding back into the mode.
    std::vector<std::uint64_t> counts(distinct, 1);
    std::uint64_t surplus = instances - distinct;
    const std::uint64_t mode_share = surplus * 6 / 10;
    counts[0] += mode_share;
    surplus -= mode_share;
    for (std::size_t i = 1; i < distinct && surplus > 0; ++i) {
        const std::uint64_t share = surplus / 2;
        if (share == 0) break;
        counts[i] += share;
        surplus -= share;
    }
    counts[0] += surplus;

    std::vector<double> stream;
    stream.reserve(instances);
    for (std::size_t i = 0; i < distinct; ++i) {
        const double value = 100.0 + 4.0 * static_cast<double>(i);
        stream.insert(stream.end(), counts[i], value);
    }

    // Fisher-Yates with the portable stream, so the order is seed-stable.
    RandomStream rng(derive_seed(seed, 0x5feedu));
    for (std::size_t i = stream.size() - 1; i > 0; --i) {
        std::swap(stream[i], stream[rng.below(i + 1)]);
    }
    return stream;
}

}  // namespace huffdp
