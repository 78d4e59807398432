#include "ingo/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace ingo {

namespace {

OptimizerConfig ngo_config(const AlgorithmSettings& settings, StrategyFlags flags,
                           std::uint64_t seed) {
    OptimizerConfig config;
    config.n = settings.n;
    config.t_max = settings.t_max;
    config.elite_frac = settings.elite_frac;
    config.weak_frac = settings.weak_frac;
    config.seed = seed;
    config.flags = flags;
    return config;
}

BaselineConfig baseline_config(const AlgorithmSettings& settings, std::uint64_t seed) {
    BaselineConfig config;
    config.n = settings.n;
    config.t_max = settings.t_max;
    config.seed = seed;
    config.abc_limit = settings.abc_limit;
    config.fa_alpha = settings.fa_alpha;
    config.fa_alpha_decay = settings.fa_alpha_decay;
    config.fa_beta0 = settings.fa_beta0;
    config.fa_gamma = settings.fa_gamma;
    return config;
}

} // namespace

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> names = {"NGO",  "INGO-DCMIS", "INGO-BPED", "INGO",
                                                   "ABC",  "FA",         "RANDOM"};
    return names;
}

bool is_known_algorithm(const std::string& name) {
    const auto& names = known_algorithms();
    return std::find(names.begin(), names.end(), name) != names.end();
}

RunFn make_algorithm(const std::string& name, const AlgorithmSettings& settings) {
    const auto variant = [settings](StrategyFlags flags) {
        return [settings, flags](std::uint64_t seed, const Objective& objective,
                                 const SearchSpace& space) {
            return run(ngo_config(settings, flags, seed), objective, space);
        };
    };
    if (name == "NGO") return variant({false, false});
    if (name == "INGO-DCMIS") return variant({true, false});
    if (name == "INGO-BPED") return variant({false, true});
    if (name == "INGO") return variant({true, true});
    if (name == "ABC")
        return [settings](std::uint64_t seed, const Objective& objective, const SearchSpace& space) {
            return abc_run(baseline_config(settings, seed), objective, space);
        };
    if (name == "FA")
        return [settings](std::uint64_t seed, const Objective& objective, const SearchSpace& space) {
            return fa_run(baseline_config(settings, seed), objective, space);
        };
    if (name == "RANDOM")
        return [settings](std::uint64_t seed, const Objective& objective, const SearchSpace& space) {
            return random_search_run(baseline_config(settings, seed), objective, space);
        };
    throw std::invalid_argument("unknown algorithm: " + name);
}

CampaignResult run_campaign(const std::vector<std::string>& algorithms,
                            const std::vector<ObjectiveCase>& objectives, std::size_t trials,
                            std::uint64_t base_seed, const AlgorithmSettings& settings,
                            std::size_t jobs) {
    if (trials < 1) throw std::invalid_argument("run_campaign: needs at least one trial");

    struct Task {
        std::size_t cell;
        std::size_t objective;
        std::size_t trial;
    };

    for (const auto& algorithm : algorithms)
        make_algorithm(algorithm, settings); // validate names before any work

    CampaignResult out;
    std::vector<Task> tasks;
    for (const auto& algorithm : algorithms) {
        for (std::size_t o = 0; o < objectives.size(); ++o) {
            CampaignCell cell;
            cell.algorithm = algorithm;
            cell.objective = objectives[o].name;
            cell.trials.resize(trials);
            const std::size_t cell_index = out.cells.size();
            out.cells.push_back(std::move(cell));
            for (std::size_t trial = 0; trial < trials; ++trial)
                tasks.push_back({cell_index, o, trial});
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    const auto worker = [&] {
        for (;;) {
            const std::size_t task_index = next.fetch_add(1);
            if (task_index >= tasks.size()) return;
            const Task task = tasks[task_index];
            CampaignCell& cell = out.cells[task.cell];
            const std::uint64_t seed = base_seed + task.trial;
            cell.trials[task.trial].seed = seed;
            try {
                const ObjectiveCase& oc = objectives[task.objective];
                const Objective objective = oc.make_objective(seed);
                const RunFn algorithm = make_algorithm(cell.algorithm, settings);
                cell.trials[task.trial].result = algorithm(seed, objective, oc.space);
            } catch (const std::exception& ex) {
                std::lock_guard lock(error_mutex);
                out.errors.push_back("(" + cell.algorithm + ", " + cell.objective + ", trial " +
                                     std::to_string(task.trial) + "): " + ex.what());
                cell.trials[task.trial].result = RunResult{}; // empty curve marks failure
            }
        }
    };

    const std::size_t thread_count =
        std::max<std::size_t>(1, std::min(jobs == 0 ? std::thread::hardware_concurrency() : jobs,
                                          tasks.size()));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::size_t i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    // Finalize stats; drop cells containing failed trials.
    std::vector<CampaignCell> completed;
    for (auto& cell : out.cells) {
        const bool failed = std::any_of(cell.trials.begin(), cell.trials.end(), [](const auto& t) {
            return t.result.curve.empty();
        });
        if (failed) continue;
        std::vector<double> finals;
        finals.reserve(cell.trials.size());
        for (const auto& trial : cell.trials) finals.push_back(trial.result.best_fitness);
        cell.stats = aggregate_stats(finals);
        cell.best_trial = static_cast<std::size_t>(
            std::min_element(finals.begin(), finals.end()) - finals.begin());
        completed.push_back(std::move(cell));
    }
    out.cells = std::move(completed);
    return out;
}

} // namespace ingo
