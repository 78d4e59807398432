#pragma once

#include <filesystem>
#include <string>

#include "ingo/benchmarks.hpp"
#include "ingo/campaign.hpp"
#include "ingo/wsn.hpp"

namespace ingo {

// Bad file, bad syntax, unknown key, or invalid value. Exit code 1 at the CLI.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Ablation, Wsn, Bench };

std::string kind_name(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);

// Fully resolved experiment description. Defaults depend on kind:
// ablation runs the four strategy variants, 20 trials; wsn runs the
// standard 50x50 scenario, 30 trials; bench runs INGO alone, 20 trials.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Bench;
    std::vector<std::string> algorithms;
    std::vector<BenchmarkId> functions;
    WsnScenario scenario;
    std::size_t trials = 20;
    std::size_t t_max = 500;
    std::size_t n = 30;
    double elite_frac = 0.2;
    double weak_frac = 0.2;
    std::uint64_t base_seed = 1;
    std::string out_dir = "results";
    std::size_t jobs = 0; // 0 -> hardware concurrency
    std::size_t abc_limit = 0;
    double fa_alpha = 0.2;
    double fa_alpha_decay = 0.97;
    double fa_beta0 = 1.0;
    double fa_gamma = 1.0;

    AlgorithmSettings settings() const;

    bool operator==(const ExperimentConfig&) const = default;
};

// Parses, defaults, and validates a config file. Distinct diagnostics for
// missing file / malformed JSON / unknown keys / invalid values.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Same pipeline from an in-memory JSON text (CLI overrides merge here).
ExperimentConfig parse_experiment_config(const std::string& json_text);

// Resolved config as a JSON document that reparses to an equal config.
std::string config_to_json(const ExperimentConfig& config);

// Per-algorithm outcome of the coverage experiment.
struct WsnAlgorithmSummary {
    std::string algorithm;
    std::uint64_t best_seed = 0;
    double best_coverage = 0.0;
    Deployment best_deployment;
    ConnectivityReport best_connectivity;
    std::vector<double> trial_eta; // connectivity of each trial's best layout
};

struct ExperimentReport {
    ExperimentConfig config;
    CampaignResult campaign;
    std::vector<WsnAlgorithmSummary> wsn; // empty unless kind == Wsn
};

// Table-1 ablation protocol over the configured benchmark functions.
ExperimentReport run_ablation(const ExperimentConfig& config);

// Coverage experiment; per algorithm the best run's deployment and its
// connectivity report are retained.
ExperimentReport run_wsn_experiment(const ExperimentConfig& config);

// Free-form benchmark campaign over the configured algorithm list.
ExperimentReport run_bench(const ExperimentConfig& config);

// Dispatch on config.kind.
ExperimentReport run_experiment(const ExperimentConfig& config);

} // namespace ingo
