#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "huffdp/noise.hpp"

using huffdp::NoiseCache;
using huffdp::NoiseParams;
using huffdp::RandomStream;

TEST_CASE("laplace sample variance and median match the distribution") {
    const NoiseParams params{1.0, 0.0, 1.0};  // b = 1, variance 2b^2 = 2
    RandomStream rng(21);
    const int n = 1000000;
    std::vector<double> samples(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        samples[i] = huffdp::laplace_sample(params, rng);
        sum += samples[i];
    }
    const double mean = sum / n;
    double var = 0.0;
    for (double s : samples) var += (s - mean) * (s - mean);
    var /= n - 1;
    CHECK(var > 1.9);
    CHECK(var < 2.1);

    std::nth_element(samples.begin(), samples.begin() + n / 2, samples.end());
    CHECK(std::abs(samples[n / 2]) <= 0.01);  // |median| <= 0.01 * b
}

TEST_CASE("doubling epsilon halves the magnitude distribution") {
    const int n = 1000000;
    RandomStream rng_a(22), rng_b(23);
    double mean_half = 0.0, mean_double = 0.0;
    std::vector<double> half(n), doubled(n);
    for (int i = 0; i < n; ++i) {
        half[i] = std::abs(huffdp::laplace_sample({1.0, 0.0, 1.0}, rng_a)) / 2.0;
        doubled[i] = std::abs(huffdp::laplace_sample({1.0, 0.0, 2.0}, rng_b));
        mean_half += half[i];
        mean_double += doubled[i];
    }
    mean_half /= n;
    mean_double /= n;
    CHECK(mean_double == doctest::Approx(mean_half).epsilon(0.01));
    std::nth_element(half.begin(), half.begin() + n / 2, half.end());
    std::nth_element(doubled.begin(), doubled.begin() + n / 2, doubled.end());
    CHECK(doubled[n / 2] == doctest::Approx(half[n / 2]).epsilon(0.02));
}

TEST_CASE("laplace density ratio never exceeds exp(epsilon)") {
    RandomStream rng(24);
    const double sensitivity = 1.0;
    for (int pair = 0; pair < 10; ++pair) {
        const double eps = 0.1 + 3.0 * rng.unit();
        const double f1 = 10.0 * rng.unit();
        const double f2 = f1 + sensitivity * rng.unit();  // shift <= sensitivity
        const double b = sensitivity / eps;
        for (int i = 0; i < 10000; ++i) {
            const double x = f1 - 8.0 * b + 16.0 * b * i / 10000.0;
            const double log_ratio = (std::abs(x - f2) - std::abs(x - f1)) / b;
            CHECK(std::exp(log_ratio) <= std::exp(eps) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("perturb_value caches one sample per distinct value") {
    NoiseCache cache;
    RandomStream rng(25);
    const NoiseParams params{1.0, 0.0, 1.0};
    const double first = huffdp::perturb_value(180, params, cache, rng);
    for (int i = 0; i < 7; ++i) {
        CHECK(huffdp::perturb_value(180, params, cache, rng) == first);
    }
    CHECK(cache.computation_count() == 1);
    huffdp::perturb_value(124, params, cache, rng);
    CHECK(cache.computation_count() == 2);
}

TEST_CASE("perturb_value folds with ABS") {
    const NoiseParams params{1.0, 0.0, 1.0};
    RandomStream rng(26);

    NoiseCache zero;
    zero.put(9.5, 0.0);
    CHECK(huffdp::perturb_value(9.5, params, zero, rng) == 9.5);

    NoiseCache negative;
    negative.put(5.0, -12.0);
    CHECK(huffdp::perturb_value(5.0, params, negative, rng) == 7.0);
}

TEST_CASE("gaussian sigma matches the analytic formula") {
    CHECK(huffdp::gaussian_sigma(1.0, 1e-5, 1.0) == doctest::Approx(4.844805).epsilon(1e-6));

    RandomStream rng(27);
    const int n = 1000000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double noisy = huffdp::gaussian_baseline(0.0, 1.0, 1e-5, 1.0, rng);
        sum += noisy;
        sq += noisy * noisy;
    }
    const double mean = sum / n;
    const double std_dev = std::sqrt(sq / n - mean * mean);
    CHECK(std_dev == doctest::Approx(4.844805).epsilon(0.01));
    CHECK(std::abs(mean) < 0.05);
}

TEST_CASE("gaussian baseline rejects invalid delta") {
    RandomStream rng(28);
    CHECK_THROWS(huffdp::gaussian_baseline(0.0, 1.0, 1.25, 1.0, rng));
    CHECK_THROWS(huffdp::gaussian_baseline(0.0, 1.0, 0.0, 1.0, rng));
}

TEST_CASE("staircase mass concentrates in the first stair for large epsilon") {
    RandomStream rng(29);
    const double eps = 10.0;
    const double gamma = huffdp::staircase_optimal_gamma(eps);
    int inside = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        if (std::abs(huffdp::staircase_sample(eps, 1.0, gamma, rng)) < 1.0) ++inside;
    }
    CHECK(static_cast<double>(inside) / n >= 0.99);
}

TEST_CASE("staircase distribution is symmetric") {
    RandomStream rng(30);
    const int n = 1000000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += huffdp::staircase_sample(1.0, 1.0, huffdp::staircase_optimal_gamma(1.0), rng);
    }
    CHECK(std::abs(sum / n) <= 0.01);
}

TEST_CASE("optimal staircase beats laplace on mean absolute noise") {
    RandomStream rng_s(31), rng_l(32);
    const int n = 1000000;
    const double gamma = huffdp::staircase_optimal_gamma(1.0);
    double stair = 0.0, lap = 0.0;
    for (int i = 0; i < n; ++i) {
        stair += std::abs(huffdp::staircase_sample(1.0, 1.0, gamma, rng_s));
        lap += std::abs(huffdp::laplace_sample({1.0, 0.0, 1.0}, rng_l));
    }
    CHECK(stair / n < lap / n);
}

TEST_CASE("staircase rejects gamma outside (0,1)") {
    RandomStream rng(33);
    CHECK_THROWS(huffdp::staircase_sample(1.0, 1.0, 0.0, rng));
    CHECK_THROWS(huffdp::staircase_sample(1.0, 1.0, 1.0, rng));
    CHECK_THROWS(huffdp::staircase_sample(0.0, 1.0, 0.5, rng));
}

TEST_CASE("noise params validate their fields") {
    CHECK_THROWS_WITH((NoiseParams{0.0, 0.0, 1.0}.validate()), "invalid sensitivity");
    CHECK_THROWS_WITH((NoiseParams{1.0, 0.0, 0.0}.validate()), "invalid epsilon");
    CHECK((NoiseParams{2.0, 0.0, 0.5}.scale()) == 4.0);
}
