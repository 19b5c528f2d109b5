#include "huffdp/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "huffdp/frequency.hpp"
#include "huffdp/leveling.hpp"

namespace huffdp {

namespace {

// Domain separator for the single baseline noise stream.
constexpr std::uint64_t kBaselineStreamKey = 0xba5e11e5u;

}  // namespace

MechanismKind mechanism_from_string(std::string_view name) {
    if (name == "huffdp") return MechanismKind::HuffDP;
    if (name == "laplace") return MechanismKind::Laplace;
    if (name == "gaussian") return MechanismKind::Gaussian;
    if (name == "staircase") return MechanismKind::Staircase;
    throw std::invalid_argument("unknown mechanism: " + std::string(name));
}

std::string_view to_string(MechanismKind m) {
    switch (m) {
        case MechanismKind::HuffDP: return "huffdp";
        case MechanismKind::Laplace: return "laplace";
        case MechanismKind::Gaussian: return "gaussian";
        case MechanismKind::Staircase: return "staircase";
    }
    return "huffdp";
}

void RunConfig::validate() const {
    budget.validate();
    if (sensitivity <= 0.0) {
        throw std::invalid_argument("invalid sensitivity");
    }
    if (!std::isfinite(mean)) {
        throw std::invalid_argument("invalid mean");
    }
    if (l_max < 1 || l_max > budget.max_level()) {
        throw std::invalid_argument("l_max must lie within the budget level table");
    }
    if (!(0.0 < gaussian_delta && gaussian_delta < 1.0)) {
        throw std::invalid_argument("invalid delta");
    }
    if (staircase_gamma > 0.0 && staircase_gamma >= 1.0) {
        throw std::invalid_argument("invalid gamma");
    }
}

PerturbationResult run_huffdp(std::span<const double> stream, const RunConfig& cfg) {
    if (stream.empty()) {
        throw std::invalid_argument("empty stream");
    }
    cfg.validate();

    const FrequencyTable freq = FrequencyTable::from_stream(stream);
    const HuffmanCodebook book = build_tree(freq);
    const LevelAssignment levels = assign_levels(book, cfg.l_max);

    PerturbationResult result;
    NoiseCache cache;

    // One budget draw and one noise draw per unique value, each from its own
    // derived sub-stream. Sub-streams are keyed by the value's bits, so the
    // outcome is independent of stream position and of the other values.
    for (const auto& [value, count] : freq.entries()) {
        RandomStream rng(derive_seed(cfg.seed, value_key(value)));
        const int level = levels.at(value).level;
        const double eps = select_budget(level, cfg.budget, rng);
        const NoiseParams params{cfg.sensitivity, cfg.mean, eps};
        const double noise = cache.fetch_or_sample(value, params, rng);
        result.per_value[value] = PerValueRecord{level, eps, noise};
    }

    result.perturbed.reserve(stream.size());
    for (double v : stream) {
        const double noisy = v + cache.at(v);
        result.perturbed.push_back(cfg.abs_fold ? std::abs(noisy) : noisy);
    }
    result.noise_computation_count = cache.computation_count();
    return result;
}

PerturbationResult run_baseline(std::span<const double> stream, MechanismKind mechanism,
                                double epsilon, const RunConfig& cfg, bool apply_abs) {
    if (stream.empty()) {
        throw std::invalid_argument("empty stream");
    }
    if (epsilon <= 0.0) {
        throw std::invalid_argument("invalid epsilon");
    }
    if (mechanism == MechanismKind::HuffDP) {
        throw std::invalid_argument("run_huffdp handles the huffdp mechanism");
    }
    cfg.validate();

    const double gamma =
        cfg.staircase_gamma > 0.0 ? cfg.staircase_gamma : staircase_optimal_gamma(epsilon);
    const NoiseParams laplace_params{cfg.sensitivity, cfg.mean, epsilon};

    RandomStream rng(
        derive_seed(cfg.seed, kBaselineStreamKey ^ static_cast<std::uint64_t>(mechanism)));

    PerturbationResult result;
    result.perturbed.reserve(stream.size());
    for (double v : stream) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite value");
        }
        double noisy = 0.0;
        switch (mechanism) {
            case MechanismKind::Laplace:
                noisy = v + laplace_sample(laplace_params, rng);
                break;
            case MechanismKind::Gaussian:
                noisy = gaussian_baseline(v, epsilon, cfg.gaussian_delta, cfg.sensitivity, rng);
                break;
            case MechanismKind::Staircase:
                noisy = staircase_baseline(v, epsilon, cfg.sensitivity, gamma, rng);
                break;
            case MechanismKind::HuffDP:
                break;  // rejected above
        }
        result.perturbed.push_back(apply_abs ? std::abs(noisy) : noisy);
        ++result.noise_computation_count;
        // Record the first-encounter sample so every input value shows up in
        // per_value; level 0 marks the fixed baseline budget.
        result.per_value.emplace(v, PerValueRecord{0, epsilon, noisy - v});
    }
    return result;
}

}  // namespace huffdp
