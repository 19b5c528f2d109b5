#pragma once

#include <cstdint>
#include <vector>

namespace huffdp {

// The 20-reading meter trace with distribution
// {180:8, 124:3, 167:3, 204:3, 332:2, 650:1}, in a fixed interleaved order.
std::vector<double> table1_stream();

// Synthetic stream with a heavy-mass mode value plus a geometrically decaying
// tail: exactly `instances` readings over exactly `distinct` unique values,
// shuffled deterministically by seed. Requires distinct >= 1 and
// instances >= distinct.
std::vector<double> heavy_mode_stream(std::size_t instances, std::size_t distinct,
                                      std::uint64_t seed);

}  // namespace huffdp
