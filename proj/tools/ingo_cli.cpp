#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ingo/outputs.hpp"

namespace {

using nlohmann::json;

struct CliOverrides {
    std::string config_path;
    std::string kind;
    std::vector<std::string> algorithms;
    std::vector<std::string> functions;
    std::int64_t trials = -1;
    std::int64_t iters = -1;
    std::int64_t pop = -1;
    std::int64_t jobs = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir;
};

void add_common_options(CLI::App* cmd, CliOverrides& overrides) {
    cmd->add_option("--config", overrides.config_path, "JSON config file; flags override it");
    cmd->add_option("--algo", overrides.algorithms, "algorithm name (repeatable)");
    cmd->add_option("--fn", overrides.functions, "benchmark function name (repeatable)");
    cmd->add_option("--trials", overrides.trials, "independent trials per cell")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--iters", overrides.iters, "iteration budget per run")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--pop", overrides.pop, "population size")->check(CLI::NonNegativeNumber);
    cmd->add_option("--jobs", overrides.jobs, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", overrides.seed, "base seed; trial i uses seed+i")
        ->each([&overrides](const std::string&) { overrides.seed_set = true; });
    cmd->add_option("--out", overrides.out_dir, "output directory");
}

// File config merged with CLI overrides into one JSON document, so that a
// single validation path handles both sources.
json merged_config(const CliOverrides& overrides, const std::string& subcommand_kind) {
    json root = json::object();
    if (!overrides.config_path.empty()) {
        std::ifstream in(overrides.config_path);
        if (!in) throw ingo::ConfigError("cannot open config file: " + overrides.config_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        try {
            root = json::parse(text);
        } catch (const json::parse_error& ex) {
            throw ingo::ConfigError(std::string("malformed config JSON: ") + ex.what());
        }
        if (!root.is_object()) throw ingo::ConfigError("config root must be a JSON object");
    }
    std::string kind = subcommand_kind;
    if (!overrides.kind.empty()) {
        if (!kind.empty() && kind != overrides.kind)
            throw ingo::ConfigError("subcommand '" + kind + "' contradicts --kind " +
                                    overrides.kind);
        kind = overrides.kind;
    }
    if (!kind.empty()) {
        if (root.contains("kind") && root.at("kind") != kind)
            throw ingo::ConfigError("config file kind '" +
                                    root.at("kind").get<std::string>() +
                                    "' contradicts requested kind '" + kind + "'");
        root["kind"] = kind;
    }
    if (!overrides.algorithms.empty()) root["algorithms"] = overrides.algorithms;
    if (!overrides.functions.empty()) root["functions"] = overrides.functions;
    if (overrides.trials >= 0) root["trials"] = overrides.trials;
    if (overrides.iters >= 0) root["iters"] = overrides.iters;
    if (overrides.pop >= 0) root["pop"] = overrides.pop;
    if (overrides.jobs >= 0) root["jobs"] = overrides.jobs;
    if (overrides.seed_set) root["seed"] = overrides.seed;
    if (!overrides.out_dir.empty()) root["out"] = overrides.out_dir;
    return root;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"INGO optimization experiment runner"};
    app.require_subcommand(0, 1);

    CliOverrides overrides;
    app.add_option("--kind", overrides.kind, "experiment kind (ablation | wsn | bench)");
    add_common_options(&app, overrides);

    CLI::App* bench = app.add_subcommand("bench", "benchmark campaign for chosen algorithms");
    CLI::App* ablate = app.add_subcommand("ablate", "four-variant strategy ablation");
    CLI::App* wsn = app.add_subcommand("wsn", "sensor coverage experiment");
    for (CLI::App* cmd : {bench, ablate, wsn}) add_common_options(cmd, overrides);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex) == 0 ? 0 : 1;
    }

    std::string subcommand_kind;
    if (bench->parsed()) subcommand_kind = "bench";
    if (ablate->parsed()) subcommand_kind = "ablation";
    if (wsn->parsed()) subcommand_kind = "wsn";

    try {
        const json root = merged_config(overrides, subcommand_kind);
        const ingo::ExperimentConfig config = ingo::parse_experiment_config(root.dump());

        const ingo::ExperimentReport report = ingo::run_experiment(config);
        const auto written = ingo::emit_outputs(report, config.out_dir);

        ingo::print_summary(report, std::cout);
        std::cout << "\nwrote " << written.size() << " files to " << config.out_dir << "\n";

        if (!report.campaign.errors.empty()) {
            std::cerr << "failed trials (partial results were written):\n";
            for (const auto& error : report.campaign.errors) std::cerr << "  " << error << "\n";
            return 2;
        }
        return 0;
    } catch (const ingo::ConfigError& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "runtime failure: " << ex.what() << "\n";
        return 2;
    }
}
