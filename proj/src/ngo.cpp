#include "ingo/ngo.hpp"

#include <cmath>
#include <numbers>

namespace ingo {

namespace {

void require_evaluated(const Population& pop, std::size_t i, const char* where) {
    if (i >= pop.size() || !pop.agents[i].evaluated)
        throw std::logic_error(std::string(where) + ": population must be evaluated first");
}

// Clamp + evaluate the candidate; commit iff strictly better than the
// agent's current fitness. Keeps best_index valid (commits only improve).
bool greedy_commit(Population& pop, std::size_t i, std::vector<double>& candidate,
                   const Objective& objective, const SearchSpace& space,
                   std::size_t* eval_count) {
    clamp_in_place(candidate, space);
    const double f = objective(candidate);
    if (eval_count) ++*eval_count;
    if (!std::isfinite(f)) throw EvaluationError(i, f);
    if (f < pop.agents[i].fitness) {
        pop.agents[i].position.swap(candidate);
        pop.agents[i].fitness = f;
        if (f < pop.agents[pop.best_index].fitness) pop.best_index = i;
        return true;
    }
    return false;
}

} // namespace

void OptimizerConfig::validate() const {
    if (n < 5) throw std::invalid_argument("optimizer config: population size must be at least 5");
    if (t_max < 1) throw std::invalid_argument("optimizer config: iteration budget must be at least 1");
    if (!(elite_frac > 0.0) || !(weak_frac > 0.0) || elite_frac + weak_frac > 1.0)
        throw std::invalid_argument("optimizer config: elite/weak fractions out of range");
}

void prey_strike_phase(Population& pop, std::size_t i, const Objective& objective,
                       const SearchSpace& space, RngStream& rng, std::size_t* eval_count) {
    require_evaluated(pop, i, "prey_strike_phase");
    if (pop.size() < 2) throw std::logic_error("prey_strike_phase: needs at least two agents");

    const std::size_t k = rng.index_excluding(pop.size(), i);
    const Agent& prey = pop.agents[k];
    const Agent& self = pop.agents[i];
    std::vector<double> candidate(space.dim());
    if (prey.fitness < self.fitness) {
        // One 1-or-2 scale per strike, fresh r per dimension. A per-dimension
        // scale would mix interpolating and overshooting coordinates in the
        // same candidate, which the greedy test then almost always rejects
        // near optima away from the origin.
        const double scale = 1.0 + static_cast<double>(rng.index(2));
        for (std::size_t j = 0; j < space.dim(); ++j) {
            const double r = rng.uniform();
            candidate[j] = self.position[j] + r * (prey.position[j] - scale * self.position[j]);
        }
    } else {
        for (std::size_t j = 0; j < space.dim(); ++j) {
            const double r = rng.uniform();
            candidate[j] = self.position[j] + r * (self.position[j] - prey.position[j]);
        }
    }
    greedy_commit(pop, i, candidate, objective, space, eval_count);
}

double exploitation_radius(std::size_t t, std::size_t t_max) {
    return 0.02 * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

void chase_escape_phase(Population& pop, std::size_t i, const Objective& objective,
                        const SearchSpace& space, RngStream& rng, std::size_t t,
                        std::size_t t_max, std::size_t* eval_count) {
    require_evaluated(pop, i, "chase_escape_phase");
    const double radius = exploitation_radius(t, t_max);
    const Agent& self = pop.agents[i];
    std::vector<double> candidate(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        const double r = rng.uniform();
        candidate[j] = self.position[j] + radius * (2.0 * r - 1.0) * self.position[j];
    }
    greedy_commit(pop, i, candidate, objective, space, eval_count);
}

double bped_weight(std::size_t t, std::size_t t_max, std::size_t dim) {
    const double pi = std::numbers::pi;
    const double freq = 1.0 / static_cast<double>(dim);
    const double progress = static_cast<double>(t) / static_cast<double>(t_max);
    return 0.5 * (std::sin(2.0 * pi * freq * static_cast<double>(t) + pi) * pi * progress + 1.0);
}

void bped_elite_update(Population& pop, std::span<const std::size_t> elite,
                       std::span<const double> x_best, const Objective& objective,
                       const SearchSpace& space, RngStream& rng, std::size_t t,
                       std::size_t t_max, std::size_t* eval_count) {
    if (elite.empty()) throw std::invalid_argument("bped_elite_update: empty elite set");
    const double w = bped_weight(t, t_max, space.dim());
    std::vector<double> candidate(space.dim());
    for (const std::size_t q : elite) {
        // Repulsion partner: another elite, or any other agent when the
        // elite set is a singleton.
        std::size_t k;
        if (elite.size() > 1) {
            std::size_t pos_q = 0;
            while (elite[pos_q] != q) ++pos_q;
            k = elite[rng.index_excluding(elite.size(), pos_q)];
        } else {
            k = rng.index_excluding(pop.size(), q);
        }
        const double z = chaotic_disturbance(rng);
        const double factor = std::round(1.0 + std::abs(z)); // 1 or 2
        const Agent& self = pop.agents[q];
        const Agent& other = pop.agents[k];
        for (std::size_t j = 0; j < space.dim(); ++j)
            candidate[j] = self.position[j] + w * (x_best[j] - factor * other.position[j]);
        greedy_commit(pop, q, candidate, objective, space, eval_count);
    }
}

void bped_weak_update(Population& pop, std::span<const std::size_t> weak,
                      std::span<const double> x_best, const Objective& objective,
                      const SearchSpace& space, RngStream& rng, std::size_t t,
                      std::size_t t_max, std::size_t* eval_count) {
    if (weak.empty()) throw std::invalid_argument("bped_weak_update: empty weak set");
    const double progress = static_cast<double>(t) / static_cast<double>(t_max);
    // Probe band shrinks five decades over the run, so the re-explorers sweep
    // every refinement scale from a tenth of the box down to last-mile steps.
    const double band_scale = 0.1 * std::pow(10.0, -5.0 * progress);
    std::vector<double> candidate(space.dim());
    for (const std::size_t q : weak) {
        Agent& agent = pop.agents[q];
        if (rng.uniform() < 0.5) {
            // Narrowing band probe around the global best.
            for (std::size_t j = 0; j < space.dim(); ++j) {
                const double band_hi = (space.upper[j] - space.lower[j]) * band_scale;
                const double band_lo = band_hi / 100.0;
                const double direction = rng.sign();
                const double step = rng.uniform();
                candidate[j] = x_best[j] + direction * (band_lo + step * (band_hi - band_lo));
            }
        } else {
            // Large mutation away from the current position.
            for (std::size_t j = 0; j < space.dim(); ++j) {
                const double direction = rng.sign();
                const double step = rng.uniform();
                candidate[j] = agent.position[j] -
                               2.0 * direction *
                                   (space.lower[j] + step * (space.upper[j] - space.lower[j]));
            }
        }
        clamp_in_place(candidate, space);
        const double f = objective(candidate);
        if (eval_count) ++*eval_count;
        if (!std::isfinite(f)) throw EvaluationError(q, f);
        agent.position = candidate;
        agent.fitness = f;
    }
}

RunResult run(const OptimizerConfig& config, const Objective& objective, const SearchSpace& space) {
    config.validate();
    RngStream rng(config.seed);
    Population pop = config.flags.use_dcmis ? dcmis_init(space, config.n, rng)
                                            : uniform_init(space, config.n, rng);
    RunResult result;
    evaluate_population(objective, pop, &result.evaluations);

    std::vector<double> best_position = pop.best().position;
    double best_fitness = pop.best().fitness;
    result.curve.reserve(config.t_max);

    for (std::size_t t = 1; t <= config.t_max; ++t) {
        for (std::size_t i = 0; i < pop.size(); ++i) {
            prey_strike_phase(pop, i, objective, space, rng, &result.evaluations);
            chase_escape_phase(pop, i, objective, space, rng, t, config.t_max,
                               &result.evaluations);
        }
        if (config.flags.use_bped) {
            const RankPartition part = rank_and_partition(pop, config.elite_frac, config.weak_frac);
            if (pop.best().fitness < best_fitness) {
                best_fitness = pop.best().fitness;
                best_position = pop.best().position;
            }
            const std::vector<double> guide = best_position; // stable snapshot
            bped_elite_update(pop, part.elite, guide, objective, space, rng, t, config.t_max,
                              &result.evaluations);
            bped_weak_update(pop, part.weak, guide, objective, space, rng, t, config.t_max,
                             &result.evaluations);
            pop.refresh_best();
        }
        if (pop.best().fitness < best_fitness) {
            best_fitness = pop.best().fitness;
            best_position = pop.best().position;
        }
        result.curve.push_back(best_fitness);
    }

    result.best_position = std::move(best_position);
    result.best_fitness = best_fitness;
    return result;
}

} // namespace ingo
