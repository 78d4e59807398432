#include "ingo/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace ingo {

namespace {

double checked_eval(const Objective& objective, std::span<const double> x, std::size_t agent,
                    std::size_t* eval_count) {
    const double f = objective(x);
    if (eval_count) ++*eval_count;
    if (!std::isfinite(f)) throw EvaluationError(agent, f);
    return f;
}

struct BestTracker {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::infinity();

    void offer(std::span<const double> pos, double f) {
        if (f < fitness) {
            fitness = f;
            position.assign(pos.begin(), pos.end());
        }
    }
};

} // namespace

void BaselineConfig::validate() const {
    if (n < 1) throw std::invalid_argument("baseline config: population size must be positive");
    if (t_max < 1) throw std::invalid_argument("baseline config: iteration budget must be positive");
    if (!(fa_alpha > 0.0) || !(fa_alpha_decay > 0.0) || !(fa_beta0 > 0.0))
        throw std::invalid_argument("baseline config: FA parameters must be positive");
    if (!(fa_gamma >= 0.0)) throw std::invalid_argument("baseline config: FA gamma must be >= 0");
}

RunResult abc_run(const BaselineConfig& config, const Objective& objective,
                  const SearchSpace& space) {
    config.validate();
    if (config.n < 2) throw std::invalid_argument("abc_run: needs at least two food sources");
    RngStream rng(config.seed);
    const std::size_t n = config.n;
    const std::size_t dim = space.dim();
    const std::size_t limit =
        config.abc_limit > 0 ? config.abc_limit : std::max<std::size_t>(1, n * dim / 2);

    RunResult result;
    Population pop = uniform_init(space, n, rng);
    evaluate_population(objective, pop, &result.evaluations);
    std::vector<std::size_t> trials(n, 0);

    BestTracker best;
    for (const auto& agent : pop.agents) best.offer(agent.position, agent.fitness);

    // One-dimension neighbor move with greedy acceptance.
    const auto try_neighbor = [&](std::size_t i) {
        const std::size_t d = rng.index(dim);
        const std::size_t partner = rng.index_excluding(n, i);
        const double phi = rng.uniform(-1.0, 1.0);
        std::vector<double> candidate = pop.agents[i].position;
        candidate[d] += phi * (candidate[d] - pop.agents[partner].position[d]);
        clamp_in_place(candidate, space);
        const double f = checked_eval(objective, candidate, i, &result.evaluations);
        if (f < pop.agents[i].fitness) {
            pop.agents[i].position = std::move(candidate);
            pop.agents[i].fitness = f;
            trials[i] = 0;
            best.offer(pop.agents[i].position, f);
        } else {
            ++trials[i];
        }
    };

    result.curve.reserve(config.t_max);
    for (std::size_t t = 1; t <= config.t_max; ++t) {
        // Employed bees.
        for (std::size_t i = 0; i < n; ++i) try_neighbor(i);

        // Onlookers: roulette over 1/(1+f) (or 1+|f| for negative f).
        std::vector<double> weight(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = pop.agents[i].fitness;
            weight[i] = f >= 0.0 ? 1.0 / (1.0 + f) : 1.0 + std::abs(f);
            total += weight[i];
        }
        for (std::size_t k = 0; k < n; ++k) {
            double ticket = rng.uniform() * total;
            std::size_t pick = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                ticket -= weight[i];
                if (ticket < 0.0) {
                    pick = i;
                    break;
                }
            }
            try_neighbor(pick);
        }

        // Scout: the most exhausted source past the limit restarts.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (trials[i] > trials[worst]) worst = i;
        if (trials[worst] > limit) {
            for (std::size_t j = 0; j < dim; ++j)
                pop.agents[worst].position[j] =
                    space.lower[j] + rng.uniform() * (space.upper[j] - space.lower[j]);
            pop.agents[worst].fitness =
                checked_eval(objective, pop.agents[worst].position, worst, &result.evaluations);
            trials[worst] = 0;
            best.offer(pop.agents[worst].position, pop.agents[worst].fitness);
        }

        result.curve.push_back(best.fitness);
    }

    result.best_position = std::move(best.position);
    result.best_fitness = best.fitness;
    return result;
}

RunResult fa_run(const BaselineConfig& config, const Objective& objective,
                 const SearchSpace& space) {
    config.validate();
    if (config.n < 2) throw std::invalid_argument("fa_run: needs at least two fireflies");
    RngStream rng(config.seed);
    const std::size_t n = config.n;
    const std::size_t dim = space.dim();

    double diag_sq = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        const double width = space.upper[j] - space.lower[j];
        diag_sq += width * width;
    }

    RunResult result;
    Population pop = uniform_init(space, n, rng);
    evaluate_population(objective, pop, &result.evaluations);

    BestTracker best;
    for (const auto& agent : pop.agents) best.offer(agent.position, agent.fitness);

    double alpha = config.fa_alpha;
    std::vector<double> brightness(n);
    result.curve.reserve(config.t_max);
    for (std::size_t t = 1; t <= config.t_max; ++t) {
        for (std::size_t i = 0; i < n; ++i) brightness[i] = pop.agents[i].fitness;

        for (std::size_t i = 0; i < n; ++i) {
            auto& mover = pop.agents[i].position;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(brightness[j] < brightness[i])) continue;
                const auto& target = pop.agents[j].position;
                double r_sq = 0.0;
                for (std::size_t d = 0; d < dim; ++d) {
                    const double diff = mover[d] - target[d];
                    r_sq += diff * diff;
                }
                const double beta =
                    config.fa_beta0 * std::exp(-config.fa_gamma * r_sq / diag_sq);
                for (std::size_t d = 0; d < dim; ++d) {
                    const double jitter =
                        alpha * (rng.uniform() - 0.5) * (space.upper[d] - space.lower[d]);
                    mover[d] += beta * (target[d] - mover[d]) + jitter;
                }
            }
            clamp_in_place(mover, space);
            pop.agents[i].fitness = checked_eval(objective, mover, i, &result.evaluations);
            best.offer(mover, pop.agents[i].fitness);
        }

        alpha *= config.fa_alpha_decay;
        result.curve.push_back(best.fitness);
    }

    result.best_position = std::move(best.position);
    result.best_fitness = best.fitness;
    return result;
}

RunResult random_search_run(const BaselineConfig& config, const Objective& objective,
                            const SearchSpace& space) {
    config.validate();
    RngStream rng(config.seed);
    RunResult result;
    BestTracker best;
    std::vector<double> sample(space.dim());
    result.curve.reserve(config.t_max);
    for (std::size_t t = 1; t <= config.t_max; ++t) {
        for (std::size_t i = 0; i < config.n; ++i) {
            for (std::size_t j = 0; j < space.dim(); ++j)
                sample[j] = space.lower[j] + rng.uniform() * (space.upper[j] - space.lower[j]);
            best.offer(sample, checked_eval(objective, sample, i, &result.evaluations));
        }
        result.curve.push_back(best.fitness);
    }
    result.best_position = std::move(best.position);
    result.best_fitness = best.fitness;
    return result;
}

} // namespace ingo
