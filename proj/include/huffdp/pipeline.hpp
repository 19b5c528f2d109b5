#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "huffdp/budget.hpp"
#include "huffdp/noise.hpp"

namespace huffdp {

enum class MechanismKind { HuffDP, Laplace, Gaussian, Staircase };

MechanismKind mechanism_from_string(std::string_view name);
std::string_view to_string(MechanismKind m);

struct RunConfig {
    BudgetConfig budget;
    double sensitivity = 1.0;
    double mean = 0.0;
    int l_max = 5;
    std::uint64_t seed = 0;
    bool abs_fold = true;           // ABS post-processing on Huff-DP outputs
    double gaussian_delta = 1e-5;   // baseline parameters; the paper fixes none
    double staircase_gamma = 0.0;   // <= 0 selects the l1-optimal value

    void validate() const;
};

struct PerValueRecord {
    int level = 0;
    double epsilon = 0.0;
    double noise = 0.0;
};

struct PerturbationResult {
    std::vector<double> perturbed;
    std::map<double, PerValueRecord> per_value;
    std::size_t noise_computation_count = 0;
};

// Full Huff-DP pass: frequency scan, Huffman tree, level assignment, one
// budget + noise draw per unique value, then stream rewrite. Each unique
// value gets its own sub-stream derived from (seed, value bits), so a
// value's budget and noise do not depend on where it sits in the stream or
// on what other values surround it.
PerturbationResult run_huffdp(std::span<const double> stream, const RunConfig& cfg);

// Reference mechanisms with a fixed epsilon: noise is drawn per instance and
// never cached, so noise_computation_count equals the stream length. Outputs
// are raw v + noise unless apply_abs is set.
PerturbationResult run_baseline(std::span<const double> stream, MechanismKind mechanism,
                                double epsilon, const RunConfig& cfg, bool apply_abs = false);

}  // namespace huffdp
