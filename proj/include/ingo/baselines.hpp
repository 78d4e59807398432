#pragma once

#include <cstdint>

#include "ingo/search_core.hpp"

namespace ingo {

// Shared knobs for the comparison optimizers. abc_limit == 0 resolves to
// the n * dim / 2 default at run time.
struct BaselineConfig {
    std::size_t n = 30;
    std::size_t t_max = 500;
    std::uint64_t seed = 0;

    std::size_t abc_limit = 0; // scout trigger
    double fa_alpha = 0.2;
    double fa_alpha_decay = 0.97;
    double fa_beta0 = 1.0;
    double fa_gamma = 1.0;

    void validate() const;
};

// Artificial bee colony: employed / onlooker / scout cycle with greedy
// acceptance and trial counters.
RunResult abc_run(const BaselineConfig& config, const Objective& objective,
                  const SearchSpace& space);

// Firefly algorithm: pairwise attraction toward brighter agents plus a
// decaying random walk. Distances are normalized by the box diagonal so
// gamma keeps its meaning across domains of different scale.
RunResult fa_run(const BaselineConfig& config, const Objective& objective,
                 const SearchSpace& space);

// Uniform sampling control: n * t_max independent draws, best tracked.
RunResult random_search_run(const BaselineConfig& config, const Objective& objective,
                            const SearchSpace& space);

} // namespace ingo
