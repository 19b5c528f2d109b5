#include <algorithm>
#include <cmath>
#include <map>

#include "doctest.h"
#include "huffdp/frequency.hpp"
#include "huffdp/leveling.hpp"
#include "huffdp/pipeline.hpp"
#include "huffdp/synthetic.hpp"

using huffdp::MechanismKind;
using huffdp::RunConfig;

TEST_CASE("table-1 stream: levels, cache size, output shape") {
    const auto stream = huffdp::table1_stream();
    RunConfig cfg;
    cfg.seed = 7;
    const auto result = huffdp::run_huffdp(stream, cfg);

    REQUIRE(result.perturbed.size() == stream.size());
    CHECK(result.noise_computation_count == 6);
    const std::map<double, int> expected{{180, 1}, {124, 3}, {167, 3},
                                         {204, 3}, {332, 4}, {650, 4}};
    for (const auto& [value, level] : expected) {
        REQUIRE(result.per_value.count(value) == 1);
        CHECK(result.per_value.at(value).level == level);
    }
    for (double v : result.perturbed) {
        CHECK(v >= 0.0);
    }
    // every occurrence of a value gets the same output
    for (std::size_t i = 0; i < stream.size(); ++i) {
        for (std::size_t j = i + 1; j < stream.size(); ++j) {
            if (stream[i] == stream[j]) {
                CHECK(result.perturbed[i] == result.perturbed[j]);
            }
        }
    }
}

TEST_CASE("constant stream degenerates to one level-1 computation") {
    const std::vector<double> stream{7, 7, 7, 7};
    RunConfig cfg;
    const auto result = huffdp::run_huffdp(stream, cfg);
    CHECK(result.noise_computation_count == 1);
    REQUIRE(result.per_value.count(7) == 1);
    CHECK(result.per_value.at(7).level == 1);
    CHECK(result.perturbed[0] == result.perturbed[1]);
    CHECK(result.perturbed[1] == result.perturbed[2]);
    CHECK(result.perturbed[2] == result.perturbed[3]);
}

TEST_CASE("2500-instance stream with 1400 distinct values costs 1400 draws") {
    const auto stream = huffdp::heavy_mode_stream(2500, 1400, 3);
    RunConfig cfg;
    const auto result = huffdp::run_huffdp(stream, cfg);
    CHECK(result.noise_computation_count == 1400);
    CHECK(result.noise_computation_count >= 800);
    CHECK(result.noise_computation_count <= 2000);

    const auto baseline = huffdp::run_baseline(stream, MechanismKind::Laplace, 1.0, cfg);
    CHECK(baseline.noise_computation_count == 2500);
}

TEST_CASE("staged modules reproduce the fused pipeline exactly") {
    const auto stream = huffdp::table1_stream();
    RunConfig cfg;
    cfg.seed = 11;
    cfg.budget.selector = huffdp::Selector::Fuzzy;
    const auto fused = huffdp::run_huffdp(stream, cfg);

    const auto freq = huffdp::FrequencyTable::from_stream(stream);
    const auto book = huffdp::build_tree(freq);
    const auto levels = huffdp::assign_levels(book, cfg.l_max);
    huffdp::NoiseCache cache;
    std::map<double, huffdp::PerValueRecord> per_value;
    for (const auto& [value, count] : freq.entries()) {
        huffdp::RandomStream rng(huffdp::derive_seed(cfg.seed, huffdp::value_key(value)));
        const double eps = huffdp::select_budget(levels.at(value).level, cfg.budget, rng);
        const huffdp::NoiseParams params{cfg.sensitivity, cfg.mean, eps};
        const double noise = cache.fetch_or_sample(value, params, rng);
        per_value[value] = {levels.at(value).level, eps, noise};
    }
    std::vector<double> perturbed;
    for (double v : stream) {
        perturbed.push_back(std::abs(v + cache.at(v)));
    }

    CHECK(perturbed == fused.perturbed);
    for (const auto& [value, rec] : per_value) {
        CHECK(fused.per_value.at(value).epsilon == rec.epsilon);
        CHECK(fused.per_value.at(value).noise == rec.noise);
    }
}

TEST_CASE("cached count never exceeds the baseline count") {
    RunConfig cfg;
    const auto repeated = huffdp::heavy_mode_stream(200, 40, 5);
    CHECK(huffdp::run_huffdp(repeated, cfg).noise_computation_count <
          huffdp::run_baseline(repeated, MechanismKind::Laplace, 1.0, cfg)
              .noise_computation_count);

    std::vector<double> all_distinct;
    for (int i = 0; i < 50; ++i) all_distinct.push_back(i);
    CHECK(huffdp::run_huffdp(all_distinct, cfg).noise_computation_count ==
          huffdp::run_baseline(all_distinct, MechanismKind::Laplace, 1.0, cfg)
              .noise_computation_count);
}

TEST_CASE("appending a mode duplicate leaves earlier noise untouched") {
    auto stream = huffdp::table1_stream();
    RunConfig cfg;
    cfg.seed = 13;
    const auto before = huffdp::run_huffdp(stream, cfg);
    stream.push_back(180);  // tree shape and levels stay put
    const auto after = huffdp::run_huffdp(stream, cfg);
    for (const auto& [value, rec] : before.per_value) {
        CHECK(after.per_value.at(value).epsilon == rec.epsilon);
        CHECK(after.per_value.at(value).noise == rec.noise);
    }
}

TEST_CASE("rare values receive more noise than the mode on average") {
    const auto stream = huffdp::table1_stream();
    double rare = 0.0, common = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RunConfig cfg;
        cfg.seed = seed;
        const auto result = huffdp::run_huffdp(stream, cfg);
        rare += std::abs(result.per_value.at(650).noise);
        common += std::abs(result.per_value.at(180).noise);
    }
    CHECK(rare > common);
}

TEST_CASE("all baselines draw per instance with the fixed budget") {
    const auto stream = huffdp::heavy_mode_stream(300, 60, 9);
    RunConfig cfg;
    for (MechanismKind mech :
         {MechanismKind::Laplace, MechanismKind::Gaussian, MechanismKind::Staircase}) {
        const auto result = huffdp::run_baseline(stream, mech, 1.0, cfg);
        CHECK(result.noise_computation_count == stream.size());
        for (const auto& [value, rec] : result.per_value) {
            CHECK(rec.level == 0);
            CHECK(rec.epsilon == 1.0);
        }
    }
}

TEST_CASE("abs folding is optional") {
    const auto stream = huffdp::table1_stream();
    RunConfig cfg;
    cfg.seed = 17;
    cfg.abs_fold = false;
    const auto raw = huffdp::run_huffdp(stream, cfg);
    for (std::size_t i = 0; i < stream.size(); ++i) {
        CHECK(raw.perturbed[i] == stream[i] + raw.per_value.at(stream[i]).noise);
    }
}

TEST_CASE("pipeline rejects bad inputs") {
    RunConfig cfg;
    CHECK_THROWS_WITH(huffdp::run_huffdp({}, cfg), "empty stream");
    CHECK_THROWS_WITH(
        huffdp::run_baseline(huffdp::table1_stream(), MechanismKind::Laplace, 0.0, cfg),
        "invalid epsilon");
    CHECK_THROWS(huffdp::run_baseline({}, MechanismKind::Laplace, 1.0, cfg));

    RunConfig bad;
    bad.budget.core_weight = 10.0;
    CHECK_THROWS(huffdp::run_huffdp(huffdp::table1_stream(), bad));

    RunConfig bad_lmax;
    bad_lmax.l_max = 9;  // beyond the 5-level default table
    CHECK_THROWS(huffdp::run_huffdp(huffdp::table1_stream(), bad_lmax));

    const std::vector<double> with_nan{1.0, std::nan("")};
    CHECK_THROWS(huffdp::run_huffdp(with_nan, cfg));
}

TEST_CASE("mechanism names round trip") {
    for (MechanismKind m : {MechanismKind::HuffDP, MechanismKind::Laplace,
                            MechanismKind::Gaussian, MechanismKind::Staircase}) {
        CHECK(huffdp::mechanism_from_string(huffdp::to_string(m)) == m);
    }
    CHECK_THROWS(huffdp::mechanism_from_string("dither"));
}
