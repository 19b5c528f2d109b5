#include "huffdp/eval.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace huffdp {

double quantize(double v, double width) {
    if (width <= 0.0) {
        throw std::invalid_argument("quantization width must be positive");
    }
    return std::round(v / width) * width;
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double round_sig6(double v) {
    return std::strtod(format_sig6(v).c_str(), nullptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        // trim surrounding whitespace and stray CR
        const auto first = cell.find_first_not_of(" \t\r");
        const auto last = cell.find_last_not_of(" \t\r");
        cells.push_back(first == std::string::npos ? std::string{}
                                                   : cell.substr(first, last - first + 1));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

}  // namespace

Dataset ingest_csv(const std::string& path, const std::string& column_selector,
                   std::optional<double> quantization, std::size_t cap) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("no numeric rows in " + path);
    }
    std::vector<std::string> first = split_csv_line(line);

    // Resolve the column: an all-digit selector is a 0-based index, anything
    // else must match a header cell in the first row.
    std::size_t column = 0;
    bool first_is_data = false;
    const bool is_index = !column_selector.empty() &&
                          std::all_of(column_selector.begin(), column_selector.end(),
                                      [](unsigned char c) { return std::isdigit(c); });
    if (is_index) {
        const std::size_t idx = std::stoul(column_selector);
        if (idx >= first.size()) {
            throw std::runtime_error("bad column name/index: " + column_selector);
        }
        column = idx;
        // Headerless files start with a data row; a header row is skipped
        // without counting as a warning.
        double probe = 0.0;
        first_is_data = parse_double(first[column], probe);
    } else {
        auto named = std::find(first.begin(), first.end(), column_selector);
        if (named == first.end()) {
            throw std::runtime_error("bad column name/index: " + column_selector);
        }
        column = static_cast<std::size_t>(named - first.begin());
    }

    Dataset ds;
    ds.name = std::filesystem::path(path).stem().string();
    ds.source_path = path;
    ds.quantization = quantization;

    auto consume = [&](const std::vector<std::string>& cells) {
        if (ds.column.size() >= cap) return;
        double v = 0.0;
        if (column < cells.size() && parse_double(cells[column], v)) {
            ds.column.push_back(quantization ? quantize(v, *quantization) : v);
        } else {
            ++ds.skipped_rows;
        }
    };

    if (first_is_data) {
        consume(first);
    }
    while (ds.column.size() < cap && std::getline(in, line)) {
        if (line.empty()) continue;
        consume(split_csv_line(line));
    }

    if (ds.column.empty()) {
        throw std::runtime_error("no numeric rows in " + path);
    }
    if (ds.skipped_rows > 0) {
        std::fprintf(stderr, "warning: skipped %zu non-numeric rows in %s\n", ds.skipped_rows,
                     path.c_str());
    }
    return ds;
}

double mae(std::span<const double> original, std::span<const double> perturbed) {
    if (original.empty()) {
        throw std::invalid_argument("empty input");
    }
    if (original.size() != perturbed.size()) {
        throw std::invalid_argument("length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        sum += std::abs(original[i] - perturbed[i]);
    }
    return sum / static_cast<double>(original.size());
}

namespace {

nlohmann::json report_to_json(const EvalReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["mechanism"] = r.mechanism;
    j["selector"] = r.selector;
    j["beta"] = r.beta;
    j["mae"] = r.mae_value;
    j["noise_computation_count"] = r.noise_computation_count;
    j["instance_count"] = r.instance_count;
    j["per_level_epsilon"] = nlohmann::json::array();
    for (const auto& s : r.per_level) {
        j["per_level_epsilon"].push_back({{"level", s.level},
                                          {"count", s.count},
                                          {"min", s.min},
                                          {"mean", s.mean},
                                          {"max", s.max}});
    }
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
    EvalReport r;
    r.mechanism = j.at("mechanism").get<std::string>();
    r.selector = j.at("selector").get<std::string>();
    r.beta = j.at("beta").get<double>();
    r.mae_value = j.at("mae").get<double>();
    r.noise_computation_count = j.at("noise_computation_count").get<std::size_t>();
    r.instance_count = j.at("instance_count").get<std::size_t>();
    for (const auto& s : j.at("per_level_epsilon")) {
        r.per_level.push_back(LevelEpsilonSummary{s.at("level").get<int>(),
                                                  s.at("count").get<std::size_t>(),
                                                  s.at("min").get<double>(),
                                                  s.at("mean").get<double>(),
                                                  s.at("max").get<double>()});
    }
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
}

std::vector<LevelEpsilonSummary> summarize_levels(const PerturbationResult& result) {
    struct Acc {
        std::size_t count = 0;
        double min = 0.0, max = 0.0, sum = 0.0;
    };
    std::map<int, Acc> levels;
    for (const auto& [value, rec] : result.per_value) {
        Acc& acc = levels[rec.level];
        if (acc.count == 0) {
            acc.min = acc.max = rec.epsilon;
        } else {
            acc.min = std::min(acc.min, rec.epsilon);
            acc.max = std::max(acc.max, rec.epsilon);
        }
        acc.sum += rec.epsilon;
        ++acc.count;
    }
    std::vector<LevelEpsilonSummary> out;
    for (const auto& [level, acc] : levels) {
        out.push_back(LevelEpsilonSummary{level, acc.count, round_sig6(acc.min),
                                          round_sig6(acc.sum / static_cast<double>(acc.count)),
                                          round_sig6(acc.max)});
    }
    return out;
}

void write_perturbed_csv(const std::filesystem::path& path, std::span<const double> original,
                         std::span<const double> perturbed, std::size_t limit) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "index,original,perturbed\n";
    const std::size_t n = std::min(limit, original.size());
    for (std::size_t i = 0; i < n; ++i) {
        out << i << ',' << format_sig6(original[i]) << ',' << format_sig6(perturbed[i]) << '\n';
    }
}

}  // namespace

std::string reports_to_json(const std::vector<EvalReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
    }
    return arr.dump(2);
}

std::vector<EvalReport> reports_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<EvalReport> reports;
    for (const auto& j : arr) {
        reports.push_back(report_from_json(j));
    }
    return reports;
}

std::vector<EvalReport> run_experiment(const Dataset& ds, const ExperimentRequest& req) {
    if (ds.column.empty()) {
        throw std::invalid_argument("empty dataset");
    }
    req.cfg.validate();

    const bool emit = !req.out_dir.empty();
    if (emit) {
        std::filesystem::create_directories(req.out_dir);
    }

    std::vector<EvalReport> reports;
    for (MechanismKind mech : req.mechanisms) {
        const auto start = std::chrono::steady_clock::now();
        PerturbationResult result =
            mech == MechanismKind::HuffDP
                ? run_huffdp(ds.column, req.cfg)
                : run_baseline(ds.column, mech, req.baseline_epsilon, req.cfg);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        EvalReport report;
        report.mechanism = std::string(to_string(mech));
        report.selector = mech == MechanismKind::HuffDP
                              ? std::string(to_string(req.cfg.budget.selector))
                              : "none";
        report.beta = round_sig6(req.cfg.budget.beta);
        report.mae_value = round_sig6(mae(ds.column, result.perturbed));
        report.noise_computation_count = result.noise_computation_count;
        report.instance_count = ds.column.size();
        report.per_level = summarize_levels(result);
        report.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

        if (emit) {
            std::string stem = ds.name + "_" + report.mechanism;
            if (mech == MechanismKind::HuffDP) {
                stem += "_" + report.selector;
            }
            const auto dir = std::filesystem::path(req.out_dir);
            write_perturbed_csv(dir / (stem + ".csv"), ds.column, result.perturbed,
                                ds.column.size());
            write_perturbed_csv(dir / (stem + "_first" + std::to_string(req.plot_prefix) + ".csv"),
                                ds.column, result.perturbed, req.plot_prefix);
        }
        reports.push_back(std::move(report));
    }

    if (emit) {
        std::ofstream out(std::filesystem::path(req.out_dir) / "report.json");
        if (!out) {
            throw std::runtime_error("cannot write report.json");
        }
        out << reports_to_json(reports) << '\n';
    }
    return reports;
}

}  // namespace huffdp
