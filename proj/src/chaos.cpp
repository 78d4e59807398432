#include "ingo/chaos.hpp"

#include <cmath>
#include <numbers>

namespace ingo {

double coupled_map(double seed_value) {
    if (!(seed_value >= 0.0) || !(seed_value < 1.0))
        throw std::invalid_argument("coupled_map: seed must lie in [0, 1)");
    const double pi = std::numbers::pi;
    return std::sin(pi * (seed_value * (1.0 - seed_value) + std::sin(pi * seed_value)));
}

ChaoticMatrix chaotic_matrix(std::size_t rows, std::size_t cols, RngStream& rng) {
    ChaoticMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.values.resize(rows * cols);
    for (auto& v : m.values) v = coupled_map(rng.uniform());
    return m;
}

Population dcmis_init(const SearchSpace& space, std::size_t n, RngStream& rng) {
    if (n < 5) throw std::invalid_argument("dcmis_init: population size must be at least 5");
    const ChaoticMatrix z = chaotic_matrix(n, space.dim(), rng);
    Population pop;
    pop.agents.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& agent = pop.agents[i];
        agent.position.resize(space.dim());
        for (std::size_t j = 0; j < space.dim(); ++j)
            agent.position[j] =
                space.lower[j] + std::abs(z.at(i, j)) * (space.upper[j] - space.lower[j]);
    }
    return pop;
}

double chaotic_disturbance(RngStream& rng) { return coupled_map(rng.uniform()); }

} // namespace ingo
