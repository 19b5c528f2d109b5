// Command-line front end: dataset ingestion, mechanism runs, report emission.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "huffdp/eval.hpp"
#include "huffdp/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Huffman-tree-driven adaptive differential privacy perturbation"};

    std::string input;
    std::string column = "0";
    std::vector<std::string> mechanisms{"huffdp"};
    std::string selector = "static";
    double beta = 1.0;
    double epsilon = 1.0;
    double sensitivity = 1.0;
    double quantize_width = 0.0;
    std::uint64_t seed = 42;
    std::size_t cap = 5000;
    std::string out_dir = "out";
    bool no_abs = false;
    bool auto_sensitivity = false;
    std::string config_path;
    std::string synthetic;
    std::size_t instances = 2500;
    std::size_t distinct = 1400;

    app.add_option("--input", input, "input CSV file");
    app.add_option("--column", column, "column name or 0-based index")->capture_default_str();
    app.add_option("--mechanism", mechanisms, "huffdp|laplace|gaussian|staircase (repeatable)")
        ->capture_default_str();
    app.add_option("--selector", selector, "static|sine|fuzzy")->capture_default_str();
    app.add_option("--beta", beta, "budget hyperparameter")->capture_default_str();
    app.add_option("--epsilon", epsilon, "fixed budget for baselines")->capture_default_str();
    app.add_option("--sensitivity", sensitivity, "global sensitivity")->capture_default_str();
    app.add_option("--quantize", quantize_width, "bucket width; 0 disables")
        ->capture_default_str();
    app.add_option("--seed", seed, "run seed")->capture_default_str();
    app.add_option("--cap", cap, "max rows ingested")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_flag("--no-abs", no_abs, "disable ABS folding of Huff-DP outputs");
    app.add_flag("--auto-sensitivity", auto_sensitivity,
                 "set sensitivity to max - min of the ingested column");
    app.add_option("--config", config_path, "budget config JSON (tables, weights, selector)");
    app.add_option("--synthetic", synthetic,
                   "generate the input instead of reading one: table1|heavy")
        ->check(CLI::IsMember({"table1", "heavy"}));
    app.add_option("--instances", instances, "synthetic heavy stream length")
        ->capture_default_str();
    app.add_option("--distinct", distinct, "synthetic heavy distinct values")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        huffdp::ExperimentRequest req;
        for (const auto& name : mechanisms) {
            req.mechanisms.push_back(huffdp::mechanism_from_string(name));
        }
        // Explicit flags override the config file; bare defaults do not.
        if (!config_path.empty()) {
            req.cfg.budget = huffdp::BudgetConfig::from_json_file(config_path);
        }
        if (app.count("--selector") > 0 || config_path.empty()) {
            req.cfg.budget.selector = huffdp::selector_from_string(selector);
        }
        if (app.count("--beta") > 0 || config_path.empty()) {
            req.cfg.budget.beta = beta;
        }
        if (app.count("--seed") > 0 || config_path.empty()) {
            req.cfg.budget.rng_seed = seed;
        }
        req.cfg.seed = req.cfg.budget.rng_seed;

        huffdp::Dataset ds;
        const std::optional<double> quant =
            quantize_width > 0.0 ? std::optional<double>(quantize_width) : std::nullopt;
        if (!synthetic.empty()) {
            ds.name = synthetic;
            ds.source_path = "synthetic:" + synthetic;
            ds.quantization = quant;
            ds.column = synthetic == "table1"
                            ? huffdp::table1_stream()
                            : huffdp::heavy_mode_stream(instances, distinct, req.cfg.seed);
            if (quant) {
                for (double& v : ds.column) v = huffdp::quantize(v, *quant);
            }
            if (ds.column.size() > cap) ds.column.resize(cap);
        } else if (!input.empty()) {
            ds = huffdp::ingest_csv(input, column, quant, cap);
        } else {
            std::fprintf(stderr, "error: provide --input or --synthetic\n");
            return 1;
        }

        req.cfg.abs_fold = !no_abs;
        req.cfg.sensitivity = sensitivity;
        if (auto_sensitivity) {
            const auto [lo, hi] = std::minmax_element(ds.column.begin(), ds.column.end());
            req.cfg.sensitivity = std::max(*hi - *lo, 1e-12);
        }
        req.baseline_epsilon = epsilon;
        req.out_dir = out_dir;

        const auto reports = huffdp::run_experiment(ds, req);
        for (const auto& r : reports) {
            std::printf("%-10s selector=%-7s beta=%-5g mae=%-12s computations=%zu/%zu  %lldms\n",
                        r.mechanism.c_str(), r.selector.c_str(), r.beta,
                        huffdp::format_sig6(r.mae_value).c_str(), r.noise_computation_count,
                        r.instance_count, static_cast<long long>(r.runtime_ms));
        }
        std::printf("artifacts written to %s\n", out_dir.c_str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
