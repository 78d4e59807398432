#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ingo/rng.hpp"

namespace ingo {

// Objective contract: maps a position to a finite value, minimization
// orientation. Maximization problems wrap themselves (e.g. 1 - value)
// before entering the optimizers.
using Objective = std::function<double(std::span<const double>)>;

// Thrown when an objective returns a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(std::size_t agent_index, double value);
    std::size_t agent_index() const { return agent_index_; }

private:
    std::size_t agent_index_;
};

// Box-bounded search region: lower[j] < upper[j] for all j.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchSpace() = default;
    SearchSpace(std::vector<double> lo, std::vector<double> hi);

    // Symmetric box [-half_range, half_range]^dim.
    static SearchSpace symmetric(std::size_t dim, double half_range);

    std::size_t dim() const { return lower.size(); }
    bool contains(std::span<const double> position) const;
};

struct Agent {
    std::vector<double> position;
    double fitness = 0.0;
    bool evaluated = false;
};

// Ordered agent list plus the index of the current minimum-fitness agent
// (ties resolved to the lowest index).
struct Population {
    std::vector<Agent> agents;
    std::size_t best_index = 0;

    std::size_t size() const { return agents.size(); }
    const Agent& best() const { return agents[best_index]; }

    // Recomputes best_index by linear scan over evaluated agents.
    void refresh_best();
};

// Best position / fitness over a whole run plus the per-iteration
// best-so-far trace (monotone non-increasing, curve.back() == best_fitness).
struct RunResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<double> curve;
    std::size_t evaluations = 0;
};

// Index partition produced by rank_and_partition.
struct RankPartition {
    std::vector<std::size_t> elite;
    std::vector<std::size_t> middle;
    std::vector<std::size_t> weak;
};

// Componentwise clamp of position into the box. In-bounds input comes back
// unchanged. Throws std::invalid_argument on dimension mismatch.
std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space);

// In-place variant used by the update loops.
void clamp_in_place(std::vector<double>& position, const SearchSpace& space);

// Evaluates every agent, refreshes best_index, preserves order. Counts one
// objective call per agent (added to eval_count when given). Throws
// EvaluationError when the objective yields a non-finite value.
void evaluate_population(const Objective& objective, Population& pop,
                         std::size_t* eval_count = nullptr);

// Splits indices into lowest-fitness elite, highest-fitness weak, and the
// middle rest. Counts are round-half-up of frac * N; ranking ties break
// toward the lower original index. Throws std::invalid_argument when the
// fractions are out of range or a set would be empty.
RankPartition rank_and_partition(const Population& pop, double elite_frac, double weak_frac);

// Uniform-random population inside the box, fitness unevaluated.
Population uniform_init(const SearchSpace& space, std::size_t n, RngStream& rng);

} // namespace ingo
