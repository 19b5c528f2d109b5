#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "huffdp/pipeline.hpp"

namespace huffdp {

struct Dataset {
    std::string name;
    std::vector<double> column;
    std::string source_path;
    std::optional<double> quantization;
    std::size_t skipped_rows = 0;
};

// round(v / width) * width; half away from zero.
double quantize(double v, double width);

// Loads one numeric column from a CSV file. The column is selected by header
// name or 0-based index; rows that fail to parse are skipped and counted; at
// most `cap` values are retained.
Dataset ingest_csv(const std::string& path, const std::string& column_selector,
                   std::optional<double> quantization = std::nullopt, std::size_t cap = 5000);

double mae(std::span<const double> original, std::span<const double> perturbed);

// Formats with 6 significant digits, the serialization width of all emitted
// numbers.
std::string format_sig6(double v);
double round_sig6(double v);

struct LevelEpsilonSummary {
    int level = 0;
    std::size_t count = 0;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    bool operator==(const LevelEpsilonSummary&) const = default;
};

struct EvalReport {
    std::string mechanism;
    std::string selector;  // "none" for baselines
    double beta = 1.0;
    double mae_value = 0.0;
    std::size_t noise_computation_count = 0;
    std::size_t instance_count = 0;
    std::vector<LevelEpsilonSummary> per_level;  // level 0 = fixed baseline budget
    std::int64_t runtime_ms = 0;
    bool operator==(const EvalReport&) const = default;
};

std::string reports_to_json(const std::vector<EvalReport>& reports);
std::vector<EvalReport> reports_from_json(const std::string& text);

struct ExperimentRequest {
    std::vector<MechanismKind> mechanisms;
    RunConfig cfg;
    double baseline_epsilon = 1.0;
    std::string out_dir;             // empty disables file emission
    std::size_t plot_prefix = 500;   // rows in the plotting CSV
};

// Runs each mechanism over the dataset in declaration order. With an out_dir
// set, emits per-mechanism perturbed CSVs (index,original,perturbed), a
// first-N plotting prefix per mechanism, and report.json with all reports.
std::vector<EvalReport> run_experiment(const Dataset& ds, const ExperimentRequest& req);

}  // namespace huffdp
