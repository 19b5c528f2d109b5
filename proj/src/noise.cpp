#include "huffdp/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace huffdp {

void NoiseParams::validate() const {
    if (sensitivity <= 0.0) {
        throw std::invalid_argument("invalid sensitivity");
    }
    if (epsilon <= 0.0) {
        throw std::invalid_argument("invalid epsilon");
    }
    if (!std::isfinite(mean)) {
        throw std::invalid_argument("invalid mean");
    }
}

double NoiseCache::at(double value) const {
    auto it = samples_.find(value);
    if (it == samples_.end()) {
        throw std::invalid_argument("value not cached");
    }
    return it->second;
}

double NoiseCache::fetch_or_sample(double value, const NoiseParams& params, RandomStream& rng) {
    auto it = samples_.find(value);
    if (it != samples_.end()) {
        return it->second;
    }
    const double sample = laplace_sample(params, rng);
    samples_.emplace(value, sample);
    return sample;
}

double laplace_sample(const NoiseParams& params, RandomStream& rng) {
    params.validate();
    const double b = params.scale();
    // u on (-0.5, 0.5); the open interval keeps log(1 - 2|u|) finite.
    const double u = rng.unit_open() - 0.5;
    const double sign = u < 0.0 ? -1.0 : 1.0;
    return params.mean - b * sign * std::log(1.0 - 2.0 * std::abs(u));
}

double perturb_value(double v, const NoiseParams& params, NoiseCache& cache, RandomStream& rng) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("non-finite value");
    }
    return std::abs(v + cache.fetch_or_sample(v, params, rng));
}

double gaussian_sigma(double epsilon, double delta, double sensitivity) {
    if (epsilon <= 0.0) {
        throw std::invalid_argument("invalid epsilon");
    }
    if (!(0.0 < delta && delta < 1.0)) {
        throw std::invalid_argument("invalid delta");
    }
    if (sensitivity <= 0.0) {
        throw std::invalid_argument("invalid sensitivity");
    }
    return sensitivity * std::sqrt(2.0 * std::log(1.25 / delta)) / epsilon;
}

double gaussian_baseline(double v, double epsilon, double delta, double sensitivity,
                         RandomStream& rng) {
    const double sigma = gaussian_sigma(epsilon, delta, sensitivity);
    // Box-Muller; hand-rolled so the stream is identical on every platform.
    const double u1 = rng.unit_open();
    const double u2 = rng.unit();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return v + sigma * z;
}

double staircase_optimal_gamma(double epsilon) {
    if (epsilon <= 0.0) {
        throw std::invalid_argument("invalid epsilon");
    }
    return 1.0 / (1.0 + std::exp(epsilon / 2.0));
}

double staircase_sample(double epsilon, double sensitivity, double gamma, RandomStream& rng) {
    if (epsilon <= 0.0) {
        throw std::invalid_argument("invalid epsilon");
    }
    if (!(0.0 < gamma && gamma < 1.0)) {
        throw std::invalid_argument("invalid gamma");
    }
    if (sensitivity <= 0.0) {
        throw std::invalid_argument("invalid sensitivity");
    }
    const double sign = rng.coin() ? 1.0 : -1.0;
    // Stair index: geometric with success probability 1 - e^{-eps}.
    const auto stair = std::floor(-std::log(rng.unit_open()) / epsilon);
    const double offset = rng.unit();
    // Inner segment [G, G + gamma) carries probability
    // gamma / (gamma + (1 - gamma) e^{-eps}) within its stair.
    const double p_inner = gamma / (gamma + (1.0 - gamma) * std::exp(-epsilon));
    const bool inner = rng.unit() < p_inner;
    const double magnitude =
        inner ? stair + gamma * offset : stair + gamma + (1.0 - gamma) * offset;
    return sign * magnitude * sensitivity;
}

double staircase_baseline(double v, double epsilon, double sensitivity, double gamma,
                          RandomStream& rng) {
    return v + staircase_sample(epsilon, sensitivity, gamma, rng);
}

}  // namespace huffdp
