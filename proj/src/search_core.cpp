#include "ingo/search_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ingo {

EvaluationError::EvaluationError(std::size_t agent_index, double value)
    : std::runtime_error("objective returned non-finite value " + std::to_string(value) +
                         " for agent " + std::to_string(agent_index)),
      agent_index_(agent_index) {}

SearchSpace::SearchSpace(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("search space needs matching non-empty bounds");
    for (std::size_t j = 0; j < lower.size(); ++j)
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument("search space requires lower < upper in every dimension");
}

SearchSpace SearchSpace::symmetric(std::size_t dim, double half_range) {
    return SearchSpace(std::vector<double>(dim, -half_range), std::vector<double>(dim, half_range));
}

bool SearchSpace::contains(std::span<const double> position) const {
    if (position.size() != dim()) return false;
    for (std::size_t j = 0; j < dim(); ++j)
        if (position[j] < lower[j] || position[j] > upper[j]) return false;
    return true;
}

void Population::refresh_best() {
    best_index = 0;
    for (std::size_t i = 1; i < agents.size(); ++i)
        if (agents[i].fitness < agents[best_index].fitness) best_index = i;
}

std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchSpace& space) {
    if (position.size() != space.dim())
        throw std::invalid_argument("clamp_to_bounds: position dimension mismatch");
    std::vector<double> out(position.begin(), position.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(std::vector<double>& position, const SearchSpace& space) {
    for (std::size_t j = 0; j < position.size(); ++j)
        position[j] = std::min(space.upper[j], std::max(space.lower[j], position[j]));
}

void evaluate_population(const Objective& objective, Population& pop, std::size_t* eval_count) {
    for (std::size_t i = 0; i < pop.agents.size(); ++i) {
        double f = objective(pop.agents[i].position);
        if (eval_count) ++*eval_count;
        if (!std::isfinite(f)) throw EvaluationError(i, f);
        pop.agents[i].fitness = f;
        pop.agents[i].evaluated = true;
    }
    pop.refresh_best();
}

RankPartition rank_and_partition(const Population& pop, double elite_frac, double weak_frac) {
    if (!(elite_frac > 0.0) || !(weak_frac > 0.0) || elite_frac + weak_frac > 1.0)
        throw std::invalid_argument("rank_and_partition: fractions must be positive and sum to at most 1");
    const std::size_t n = pop.size();
    const auto count = [n](double frac) {
        return static_cast<std::size_t>(std::floor(frac * static_cast<double>(n) + 0.5));
    };
    const std::size_t n_elite = count(elite_frac);
    const std::size_t n_weak = count(weak_frac);
    if (n_elite == 0 || n_weak == 0)
        throw std::invalid_argument("rank_and_partition: population too small for requested fractions");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pop.agents[a].fitness != pop.agents[b].fitness)
            return pop.agents[a].fitness < pop.agents[b].fitness;
        return a < b;
    });

    RankPartition part;
    part.elite.assign(order.begin(), order.begin() + n_elite);
    part.middle.assign(order.begin() + n_elite, order.end() - n_weak);
    part.weak.assign(order.end() - n_weak, order.end());
    return part;
}

Population uniform_init(const SearchSpace& space, std::size_t n, RngStream& rng) {
    Population pop;
    pop.agents.resize(n);
    for (auto& agent : pop.agents) {
        agent.position.resize(space.dim());
        for (std::size_t j = 0; j < space.dim(); ++j)
            agent.position[j] = space.lower[j] + rng.uniform() * (space.upper[j] - space.lower[j]);
    }
    return pop;
}

} // namespace ingo
