#pragma once

#include <functional>
#include <string>

#include "ingo/baselines.hpp"
#include "ingo/ngo.hpp"
#include "ingo/stats.hpp"

namespace ingo {

// Shared run budget plus the per-family knobs; seed is injected per trial.
struct AlgorithmSettings {
    std::size_t n = 30;
    std::size_t t_max = 500;
    double elite_frac = 0.2;
    double weak_frac = 0.2;
    std::size_t abc_limit = 0; // 0 -> n * dim / 2
    double fa_alpha = 0.2;
    double fa_alpha_decay = 0.97;
    double fa_beta0 = 1.0;
    double fa_gamma = 1.0;
};

using RunFn = std::function<RunResult(std::uint64_t seed, const Objective& objective,
                                      const SearchSpace& space)>;

// Known names: NGO, INGO-DCMIS, INGO-BPED, INGO, ABC, FA, RANDOM.
// Throws std::invalid_argument for anything else.
RunFn make_algorithm(const std::string& name, const AlgorithmSettings& settings);
const std::vector<std::string>& known_algorithms();
bool is_known_algorithm(const std::string& name);

// One objective column of a campaign; make_objective must return a closure
// safe to use on the calling thread (stochastic objectives derive their
// noise from the trial seed).
struct ObjectiveCase {
    std::string name;
    SearchSpace space;
    std::function<Objective(std::uint64_t trial_seed)> make_objective;
};

struct TrialRecord {
    std::uint64_t seed = 0;
    RunResult result;
};

// Results of all trials of one (algorithm, objective) pair; stats are over
// the final best fitness values.
struct CampaignCell {
    std::string algorithm;
    std::string objective;
    TrialStats stats;
    std::vector<TrialRecord> trials;
    std::size_t best_trial = 0; // lowest final fitness
};

struct CampaignResult {
    std::vector<CampaignCell> cells;
    std::vector<std::string> errors; // (algorithm, objective, trial) context
};

// Runs trials seeded base_seed + trial_index (identical across algorithms)
// for every (algorithm, objective) pair, optionally across jobs threads.
// Cells with any failed trial are dropped and reported in errors.
CampaignResult run_campaign(const std::vector<std::string>& algorithms,
                            const std::vector<ObjectiveCase>& objectives, std::size_t trials,
                            std::uint64_t base_seed, const AlgorithmSettings& settings,
                            std::size_t jobs = 1);

} // namespace ingo
