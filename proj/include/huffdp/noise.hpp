#pragma once

#include <cstddef>
#include <unordered_map>

#include "huffdp/random.hpp"

namespace huffdp {

// Laplace parameters; the scale is always sensitivity / epsilon.
struct NoiseParams {
    double sensitivity = 1.0;  // global sensitivity
    double mean = 0.0;
    double epsilon = 1.0;

    double scale() const { return sensitivity / epsilon; }
    void validate() const;
};

// Per-unique-value noise memo. Repeated values reuse the first sample, so a
// stream with U distinct values costs exactly U fresh draws.
class NoiseCache {
public:
    bool contains(double value) const { return samples_.find(value) != samples_.end(); }
    double at(double value) const;
    void put(double value, double sample) { samples_[value] = sample; }
    std::size_t computation_count() const { return samples_.size(); }

    // Returns the cached sample, drawing a fresh one on first encounter.
    double fetch_or_sample(double value, const NoiseParams& params, RandomStream& rng);

private:
    std::unordered_map<double, double> samples_;
};

// Inverse-CDF draw from Laplace(mean, sensitivity / epsilon).
double laplace_sample(const NoiseParams& params, RandomStream& rng);

// |v + N_v| with N_v cached per value.
double perturb_value(double v, const NoiseParams& params, NoiseCache& cache, RandomStream& rng);

// Analytic Gaussian mechanism, noise per call, no folding.
double gaussian_sigma(double epsilon, double delta, double sensitivity);
double gaussian_baseline(double v, double epsilon, double delta, double sensitivity,
                         RandomStream& rng);

// Geometric staircase mechanism. gamma must lie in (0, 1);
// staircase_optimal_gamma gives the l1-optimal 1/(1 + e^{eps/2}).
double staircase_optimal_gamma(double epsilon);
double staircase_sample(double epsilon, double sensitivity, double gamma, RandomStream& rng);
double staircase_baseline(double v, double epsilon, double sensitivity, double gamma,
                          RandomStream& rng);

}  // namespace huffdp
