#include "ingo/experiment.hpp"

#include <fstream>
#include <set>
#include <type_traits>

#include <json.hpp>

namespace ingo {

namespace {

using nlohmann::json;

const std::vector<std::string> kAblationVariants = {"NGO", "INGO-DCMIS", "INGO-BPED", "INGO"};

void reject_unknown_keys(const json& object, const std::set<std::string>& known,
                         const std::string& context) {
    for (const auto& [key, value] : object.items())
        if (!known.contains(key))
            throw ConfigError("unknown key '" + key + "' in " + context);
}

template <typename T>
void read_field(const json& object, const char* key, T& into) {
    if (!object.contains(key)) return;
    const json& value = object.at(key);
    if constexpr (std::is_unsigned_v<T>) {
        // get<unsigned> would wrap negative inputs silently.
        if (value.is_number_integer() && !value.is_number_unsigned() &&
            value.get<std::int64_t>() < 0)
            throw ConfigError(std::string("invalid value for '") + key + "': must not be negative");
    }
    try {
        into = value.get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("invalid value for '") + key + "'");
    }
}

ExperimentConfig apply_defaults(ExperimentKind kind) {
    ExperimentConfig config;
    config.kind = kind;
    switch (kind) {
        case ExperimentKind::Ablation:
            config.algorithms = kAblationVariants;
            config.functions.assign(kAllBenchmarks.begin(), kAllBenchmarks.end());
            config.trials = 20;
            break;
        case ExperimentKind::Wsn:
            config.algorithms = {"INGO", "NGO", "ABC", "FA"};
            config.trials = 30;
            break;
        case ExperimentKind::Bench:
            config.algorithms = {"INGO"};
            config.functions.assign(kAllBenchmarks.begin(), kAllBenchmarks.end());
            config.trials = 20;
            break;
    }
    return config;
}

ExperimentConfig config_from_json(const json& root) {
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown_keys(root,
                        {"kind", "algorithms", "functions", "trials", "iters", "pop", "seed",
                         "out", "jobs", "elite_frac", "weak_frac", "scenario", "abc", "fa"},
                        "config");
    if (!root.contains("kind")) throw ConfigError("config must name an experiment kind");

    std::string kind_text;
    read_field(root, "kind", kind_text);
    ExperimentConfig config = apply_defaults(kind_from_name(kind_text));

    if (root.contains("algorithms")) {
        if (config.kind == ExperimentKind::Ablation)
            throw ConfigError("ablation runs the fixed four-variant set; drop 'algorithms'");
        std::vector<std::string> names;
        read_field(root, "algorithms", names);
        if (names.empty()) throw ConfigError("'algorithms' must not be empty");
        for (const auto& name : names)
            if (!is_known_algorithm(name)) throw ConfigError("unknown algorithm '" + name + "'");
        config.algorithms = names;
    }
    if (root.contains("functions")) {
        if (config.kind == ExperimentKind::Wsn)
            throw ConfigError("'functions' does not apply to the wsn experiment");
        std::vector<std::string> names;
        read_field(root, "functions", names);
        if (names.empty()) throw ConfigError("'functions' must not be empty");
        config.functions.clear();
        for (const auto& name : names) {
            try {
                config.functions.push_back(benchmark_from_name(name));
            } catch (const std::invalid_argument& ex) {
                throw ConfigError(ex.what());
            }
        }
    }

    read_field(root, "trials", config.trials);
    read_field(root, "iters", config.t_max);
    read_field(root, "pop", config.n);
    read_field(root, "seed", config.base_seed);
    read_field(root, "out", config.out_dir);
    read_field(root, "jobs", config.jobs);
    read_field(root, "elite_frac", config.elite_frac);
    read_field(root, "weak_frac", config.weak_frac);

    if (root.contains("scenario")) {
        if (config.kind != ExperimentKind::Wsn)
            throw ConfigError("'scenario' only applies to the wsn experiment");
        const json& sc = root.at("scenario");
        if (!sc.is_object()) throw ConfigError("'scenario' must be an object");
        reject_unknown_keys(
            sc, {"length", "width", "nodes", "sensing_radius", "comm_radius", "grid_step"},
            "scenario");
        read_field(sc, "length", config.scenario.length);
        read_field(sc, "width", config.scenario.width);
        read_field(sc, "nodes", config.scenario.node_count);
        read_field(sc, "sensing_radius", config.scenario.sensing_radius);
        read_field(sc, "comm_radius", config.scenario.comm_radius);
        read_field(sc, "grid_step", config.scenario.grid_step);
    }
    if (root.contains("abc")) {
        const json& abc = root.at("abc");
        if (!abc.is_object()) throw ConfigError("'abc' must be an object");
        reject_unknown_keys(abc, {"limit"}, "abc");
        read_field(abc, "limit", config.abc_limit);
    }
    if (root.contains("fa")) {
        const json& fa = root.at("fa");
        if (!fa.is_object()) throw ConfigError("'fa' must be an object");
        reject_unknown_keys(fa, {"alpha", "alpha_decay", "beta0", "gamma"}, "fa");
        read_field(fa, "alpha", config.fa_alpha);
        read_field(fa, "alpha_decay", config.fa_alpha_decay);
        read_field(fa, "beta0", config.fa_beta0);
        read_field(fa, "gamma", config.fa_gamma);
    }

    // Value validation, with the library's own messages surfaced as config
    // diagnostics.
    if (config.trials < 1) throw ConfigError("'trials' must be at least 1");
    if (config.t_max < 1) throw ConfigError("'iters' must be at least 1");
    if (config.n < 5) throw ConfigError("'pop' must be at least 5");
    if (!(config.elite_frac > 0.0) || !(config.weak_frac > 0.0) ||
        config.elite_frac + config.weak_frac > 1.0)
        throw ConfigError("elite/weak fractions must be positive and sum to at most 1");
    if (config.kind == ExperimentKind::Wsn) {
        try {
            config.scenario.validate();
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }
    try {
        BaselineConfig probe;
        probe.abc_limit = config.abc_limit;
        probe.fa_alpha = config.fa_alpha;
        probe.fa_alpha_decay = config.fa_alpha_decay;
        probe.fa_beta0 = config.fa_beta0;
        probe.fa_gamma = config.fa_gamma;
        probe.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
    return config;
}

json config_as_json(const ExperimentConfig& config) {
    json root;
    root["kind"] = kind_name(config.kind);
    if (config.kind != ExperimentKind::Ablation) root["algorithms"] = config.algorithms;
    if (config.kind != ExperimentKind::Wsn) {
        std::vector<std::string> names;
        names.reserve(config.functions.size());
        for (BenchmarkId id : config.functions) names.push_back(benchmark_name(id));
        root["functions"] = names;
    }
    root["trials"] = config.trials;
    root["iters"] = config.t_max;
    root["pop"] = config.n;
    root["seed"] = config.base_seed;
    root["out"] = config.out_dir;
    root["jobs"] = config.jobs;
    root["elite_frac"] = config.elite_frac;
    root["weak_frac"] = config.weak_frac;
    if (config.kind == ExperimentKind::Wsn)
        root["scenario"] = {{"length", config.scenario.length},
                            {"width", config.scenario.width},
                            {"nodes", config.scenario.node_count},
                            {"sensing_radius", config.scenario.sensing_radius},
                            {"comm_radius", config.scenario.comm_radius},
                            {"grid_step", config.scenario.grid_step}};
    root["abc"] = {{"limit", config.abc_limit}};
    root["fa"] = {{"alpha", config.fa_alpha},
                  {"alpha_decay", config.fa_alpha_decay},
                  {"beta0", config.fa_beta0},
                  {"gamma", config.fa_gamma}};
    return root;
}

std::vector<ObjectiveCase> benchmark_cases(const ExperimentConfig& config) {
    std::vector<ObjectiveCase> cases;
    cases.reserve(config.functions.size());
    for (BenchmarkId id : config.functions) {
        const BenchmarkSpec& spec = benchmark_spec(id);
        cases.push_back({spec.name, spec.space(), [id](std::uint64_t trial_seed) {
                             // Salted so the objective noise stream is
                             // decoupled from the optimizer stream.
                             return make_benchmark_objective(id,
                                                             trial_seed ^ 0x9e3779b97f4a7c15ULL);
                         }});
    }
    return cases;
}

} // namespace

std::string kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Ablation: return "ablation";
        case ExperimentKind::Wsn: return "wsn";
        case ExperimentKind::Bench: return "bench";
    }
    return "bench";
}

ExperimentKind kind_from_name(const std::string& name) {
    if (name == "ablation") return ExperimentKind::Ablation;
    if (name == "wsn") return ExperimentKind::Wsn;
    if (name == "bench") return ExperimentKind::Bench;
    throw ConfigError("unknown experiment kind '" + name + "' (expected ablation, wsn, or bench)");
}

AlgorithmSettings ExperimentConfig::settings() const {
    AlgorithmSettings settings;
    settings.n = n;
    settings.t_max = t_max;
    settings.elite_frac = elite_frac;
    settings.weak_frac = weak_frac;
    settings.abc_limit = abc_limit;
    settings.fa_alpha = fa_alpha;
    settings.fa_alpha_decay = fa_alpha_decay;
    settings.fa_beta0 = fa_beta0;
    settings.fa_gamma = fa_gamma;
    return settings;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_experiment_config(text);
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw ConfigError(std::string("malformed config JSON: ") + ex.what());
    }
    return config_from_json(root);
}

std::string config_to_json(const ExperimentConfig& config) {
    return config_as_json(config).dump(2) + "\n";
}

ExperimentReport run_ablation(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::Ablation)
        throw std::invalid_argument("run_ablation: config kind mismatch");
    ExperimentReport report;
    report.config = config;
    report.campaign = run_campaign(config.algorithms, benchmark_cases(config), config.trials,
                                   config.base_seed, config.settings(), config.jobs);
    return report;
}

ExperimentReport run_bench(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::Bench)
        throw std::invalid_argument("run_bench: config kind mismatch");
    ExperimentReport report;
    report.config = config;
    report.campaign = run_campaign(config.algorithms, benchmark_cases(config), config.trials,
                                   config.base_seed, config.settings(), config.jobs);
    return report;
}

ExperimentReport run_wsn_experiment(const ExperimentConfig& config) {
    if (config.kind != ExperimentKind::Wsn)
        throw std::invalid_argument("run_wsn_experiment: config kind mismatch");
    const WsnScenario scenario = config.scenario;
    std::vector<ObjectiveCase> cases;
    cases.push_back({"coverage", deployment_space(scenario), [scenario](std::uint64_t) {
                         return coverage_objective(scenario);
                     }});

    ExperimentReport report;
    report.config = config;
    report.campaign = run_campaign(config.algorithms, cases, config.trials, config.base_seed,
                                   config.settings(), config.jobs);

    for (const auto& cell : report.campaign.cells) {
        WsnAlgorithmSummary summary;
        summary.algorithm = cell.algorithm;
        const TrialRecord& best = cell.trials[cell.best_trial];
        summary.best_seed = best.seed;
        summary.best_coverage = 1.0 - best.result.best_fitness;
        summary.best_deployment = decode_deployment(best.result.best_position, scenario);
        summary.best_connectivity = connectivity_rate(summary.best_deployment, scenario);
        summary.trial_eta.reserve(cell.trials.size());
        for (const auto& trial : cell.trials)
            summary.trial_eta.push_back(
                connectivity_rate(decode_deployment(trial.result.best_position, scenario), scenario)
                    .eta);
        report.wsn.push_back(std::move(summary));
    }
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::Ablation: return run_ablation(config);
        case ExperimentKind::Wsn: return run_wsn_experiment(config);
        case ExperimentKind::Bench: return run_bench(config);
    }
    throw std::invalid_argument("run_experiment: bad kind");
}

} // namespace ingo
