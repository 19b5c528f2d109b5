#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "huffdp/random.hpp"

namespace huffdp {

enum class Selector { Static, Sine, Fuzzy };

Selector selector_from_string(std::string_view name);
std::string_view to_string(Selector s);

struct StaticRange {
    double start;  // S_p
    double final;  // F_p
};

struct FuzzyParams {
    double s_b1, s_b2;  // starting boundary
    double f_b1, f_b2;  // final boundary
    double c_v1, c_v2;  // core
};

// Per-level budget tables and selector hyperparameters.
//
// The default static table is five contiguous 0.2-wide sets descending from
// 1.0 (level 2 spans [0.6, 0.8)); level 5's lower edge is epsilon_min so the
// budget stays strictly positive. The default fuzzy table puts a 0.06-wide
// boundary band around each static endpoint and uses the interior as the
// core, clamped to [epsilon_min, 1.0]. Every table and weight can be
// overridden, either directly or through a JSON config file.
struct BudgetConfig {
    Selector selector = Selector::Static;
    double beta = 1.0;
    std::vector<StaticRange> level_table = default_level_table();
    std::vector<FuzzyParams> fuzzy_table = default_fuzzy_table();
    double boundary_weight = 20.0;  // b_p, percent
    double core_weight = 60.0;      // c_p, percent
    double epsilon_min = 0.01;
    std::uint64_t rng_seed = 0;

    static std::vector<StaticRange> default_level_table();
    static std::vector<FuzzyParams> default_fuzzy_table();

    int max_level() const { return static_cast<int>(level_table.size()); }

    // Analytic [min, max] of the fuzzy draw for a level, from the interval
    // endpoints of its parameter row.
    std::pair<double, double> fuzzy_bounds(int level) const;

    // Throws std::invalid_argument when any table or weight is malformed.
    void validate() const;

    std::string to_json() const;
    static BudgetConfig from_json(const std::string& text);
    static BudgetConfig from_json_file(const std::string& path);
};

// beta * U[S_p, F_p) for the level's static range.
double static_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng);

// max(epsilon_min, beta * sin(U(0, pi)) / level). The floor keeps the budget
// away from the sin -> 0 endpoints, which would blow up the Laplace scale.
double sine_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng);

// beta * (b_p * (B_V1 + B_V2) + c_p * C_Vt) / 100 with the three draws taken
// from the level's boundary and core intervals, in that order.
double fuzzy_epsilon(int level, const BudgetConfig& cfg, RandomStream& rng);

// Dispatches to the selector named in cfg.
double select_budget(int level, const BudgetConfig& cfg, RandomStream& rng);

}  // namespace huffdp
