#include "huffdp/budget.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace huffdp {

Selector selector_from_string(std::string_view name) {
    if (name == "static") return Selector::Static;
    if (name == "sine") return Selector::Sine;
    if (name == "fuzzy") return Selector::Fuzzy;
    throw std::invalid_argument("unknown selector: " + std::string(name));
}

std::string_view to_string(Selector s) {
    switch (s) {
        case Selector::Static: return "static";
        case Selector::Sine: return "sine";
        case Selector::Fuzzy: return "fuzzy";
    }
    return "static";
}

std::vector<StaticRange> BudgetConfig::default_level_table() {
    // Five contiguous 0.2-wide sets descending from 1.0; the last lower edge
    // is the epsilon floor rather than 0.
    return {{0.8, 1.0}, {0.6, 0.8}, {0.4, 0.6}, {0.2, 0.4}, {0.01, 0.2}};
}

std::vector<FuzzyParams> BudgetConfig::default_fuzzy_table() {
    std::vector<FuzzyParams> table;
    for (const auto& [lo, hi] : default_level_table()) {
        auto clamp01 = [](double x) { return std::clamp(x, 0.01, 1.0); };
        table.push_back(FuzzyParams{
            clamp01(lo - 0.03), clamp01(lo + 0.03),  // starting boundary
            clamp01(hi - 0.03), clamp01(hi + 0.03),  // final boundary
            clamp01(lo + 0.03), clamp01(hi - 0.03),  // core
        });
    }
    return table;
}

std::pair<double, double> BudgetConfig::fuzzy_bounds(int level) const {
    if (level < 1 || level > static_cast<int>(fuzzy_table.size())) {
        throw std::invalid_argument("invalid level");
    }
    const FuzzyParams& p = fuzzy_table[static_cast<std::size_t>(level - 1)];
    const double lo =
        beta * (boundary_weight * (p.s_b1 + p.f_b1) + core_weight * p.c_v1) / 100.0;
    const double hi =
        beta * (boundary_weight * (p.s_b2 + p.f_b2) + core_weight * p.c_v2) / 100.0;
    return {lo, hi};
}

void BudgetConfig::validate() const {
    if (beta <= 0.0) {
        throw std::invalid_argument("beta must be positive");
    }
    if (epsilon_min <= 0.0) {
        throw std::invalid_argument("epsilon_min must be positive");
    }
    if (std::abs(2.0 * boundary_weight + core_weight - 100.0) > 1e-9) {
        throw std::invalid_argument("fuzzy weights must satisfy 2*b_p + c_p = 100");
    }
    if (level_table.empty()) {
        throw std::invalid_argument("level table is empty");
    }
    for (const auto& range : level_table) {
        if (!(0.0 < range.start && range.start < range.final)) {
            throw std::invalid_argument("level table range must satisfy 0 < start < final");
        }
    }
    if (fuzzy_table.size() != level_table.size()) {
        throw std::invalid_argument("fuzzy table size must match level table");
    }
    for (const auto& p : fuzzy_table) {
        const bool ordered = 0.0 < p.s_b1 && p.s_b1 < p.s_b2 && p.s_b2 <= p.c_v1 &&
                             p.c_v1 < p.c_v2 && p.c_v2 <= p.f_b1 && p.f_b1 < p.f_b2;
        if (!ordered) {
            throw std::invalid_argument(
                "fuzzy table row must satisfy 0 < s_b1 < s_b2 <= c_v1 < c_v2 <= f_b1 < f_b2");
        }
    }
}

namespace {

void check_level(int level, int max_level) {
    if (level < 1 || level > max_level) {
        throw std::invalid_argument("invalid level");
    }
}

}  // namespace

double static_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng) {
    check_level(level, cfg.max_level());
    const StaticRange& range = cfg.level_table[static_cast<std::size_t>(level - 1)];
    return cfg.beta * rng.uniform(range.start, range.final);
}

double sine_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng) {
    check_level(level, cfg.max_level());
    const double angle = rng.uniform_open(0.0, std::numbers::pi);
    return std::max(cfg.epsilon_min, cfg.beta * std::sin(angle) / level);
}

double fuzzy_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng) {
    if (level < 1 || level > static_cast<int>(cfg.fuzzy_table.size())) {
        throw std::invalid_argument("invalid level");
    }
    const FuzzyParams& p = cfg.fuzzy_table[static_cast<std::size_t>(level - 1)];
    const double b_v1 = rng.uniform(p.s_b1, p.s_b2);
    const double b_v2 = rng.uniform(p.f_b1, p.f_b2);
    const double c_vt = rng.uniform(p.c_v1, p.c_v2);
    return cfg.beta *
           (cfg.boundary_weight * (b_v1 + b_v2) + cfg.core_weight * c_vt) / 100.0;
}

double select_budget(int level, const BudgetConfig& cfg, RandomStream& rng) {
    switch (cfg.selector) {
        case Selector::Static: return static_epsilon(level, cfg, rng);
        case Selector::Sine: return sine_epsilon(level, cfg, rng);
        case Selector::Fuzzy: return fuzzy_epsilon(level, cfg, rng);
    }
    throw std::invalid_argument("unknown selector");
}

std::string BudgetConfig::to_json() const {
    nlohmann::json j;
    j["selector"] = std::string(huffdp::to_string(selector));
    j["beta"] = beta;
    j["seed"] = rng_seed;
    j["epsilon_min"] = epsilon_min;
    j["boundary_weight"] = boundary_weight;
    j["core_weight"] = core_weight;
    j["level_table"] = nlohmann::json::array();
    for (const auto& r : level_table) {
        j["level_table"].push_back({{"start", r.start}, {"final", r.final}});
    }
    j["fuzzy_table"] = nlohmann::json::array();
    for (const auto& p : fuzzy_table) {
        j["fuzzy_table"].push_back({{"s_b", {p.s_b1, p.s_b2}},
                                    {"f_b", {p.f_b1, p.f_b2}},
                                    {"c_v", {p.c_v1, p.c_v2}}});
    }
    return j.dump(2);
}

BudgetConfig BudgetConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BudgetConfig cfg;
    if (j.contains("selector")) {
        cfg.selector = selector_from_string(j["selector"].get<std::string>());
    }
    if (j.contains("beta")) cfg.beta = j["beta"].get<double>();
    if (j.contains("seed")) cfg.rng_seed = j["seed"].get<std::uint64_t>();
    if (j.contains("epsilon_min")) cfg.epsilon_min = j["epsilon_min"].get<double>();
    if (j.contains("boundary_weight")) cfg.boundary_weight = j["boundary_weight"].get<double>();
    if (j.contains("core_weight")) cfg.core_weight = j["core_weight"].get<double>();
    if (j.contains("level_table")) {
        cfg.level_table.clear();
        for (const auto& r : j["level_table"]) {
            cfg.level_table.push_back({r.at("start").get<double>(), r.at("final").get<double>()});
        }
    }
    if (j.contains("fuzzy_table")) {
        cfg.fuzzy_table.clear();
        for (const auto& p : j["fuzzy_table"]) {
            const auto& sb = p.at("s_b");
            const auto& fb = p.at("f_b");
            const auto& cv = p.at("c_v");
            cfg.fuzzy_table.push_back({sb.at(0).get<double>(), sb.at(1).get<double>(),
                                       fb.at(0).get<double>(), fb.at(1).get<double>(),
                                       cv.at(0).get<double>(), cv.at(1).get<double>()});
        }
    }
    cfg.validate();
    return cfg;
}

BudgetConfig BudgetConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

}  // namespace huffdp
