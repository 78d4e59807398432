#pragma once

#include <cstdint>

#include "ingo/chaos.hpp"
#include "ingo/search_core.hpp"

namespace ingo {

// Ablation axes: (false,false)=NGO, (true,false)=INGO-DCMIS,
// (false,true)=INGO-BPED, (true,true)=INGO.
struct StrategyFlags {
    bool use_dcmis = false;
    bool use_bped = false;
};

struct OptimizerConfig {
    std::size_t n = 30;
    std::size_t t_max = 500;
    double elite_frac = 0.2;
    double weak_frac = 0.2;
    std::uint64_t seed = 0;
    StrategyFlags flags;

    // Throws std::invalid_argument on violated parameter constraints.
    void validate() const;
};

// Prey-identification / strike update for agent i: a random prey is picked
// among the other agents, the candidate moves toward it (or away when the
// prey is worse), one fresh r in [0,1) and scale I in {1,2} per dimension.
// Candidate is clamped and committed only on strict improvement.
void prey_strike_phase(Population& pop, std::size_t i, const Objective& objective,
                       const SearchSpace& space, RngStream& rng,
                       std::size_t* eval_count = nullptr);

// Neighborhood radius of the pursuit phase: 0.02 * (1 - t / t_max).
double exploitation_radius(std::size_t t, std::size_t t_max);

// Chase-and-escape update for agent i: per-dimension multiplicative jitter
// within the shrinking exploitation radius, greedy acceptance.
void chase_escape_phase(Population& pop, std::size_t i, const Objective& objective,
                        const SearchSpace& space, RngStream& rng, std::size_t t,
                        std::size_t t_max, std::size_t* eval_count = nullptr);

// Elite-update weight: 0.5 * (sin(2*pi*t/dim + pi) * pi * (t/t_max) + 1).
// Near 0.5 early, oscillates with growing amplitude late.
double bped_weight(std::size_t t, std::size_t t_max, std::size_t dim);

// Evolves each elite agent toward x_best with a chaotic 1-or-2 repulsion
// scale on a random other elite; greedy acceptance.
void bped_elite_update(Population& pop, std::span<const std::size_t> elite,
                       std::span<const double> x_best, const Objective& objective,
                       const SearchSpace& space, RngStream& rng, std::size_t t,
                       std::size_t t_max, std::size_t* eval_count = nullptr);

// Forced re-exploration of the weak agents: either a narrowing-band probe
// around x_best or a large mutation away from the current position. The
// replacement is unconditional; callers re-derive the population best after
// the stage.
void bped_weak_update(Population& pop, std::span<const std::size_t> weak,
                      std::span<const double> x_best, const Objective& objective,
                      const SearchSpace& space, RngStream& rng, std::size_t t,
                      std::size_t t_max, std::size_t* eval_count = nullptr);

// Full optimization loop: chaotic or uniform initialization, then per
// iteration the two-phase goshawk update over every agent and, when
// enabled, the elite/weak evolution stage. Returns the best-so-far trace.
RunResult run(const OptimizerConfig& config, const Objective& objective,
              const SearchSpace& space);

} // namespace ingo
