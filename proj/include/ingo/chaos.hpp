#pragma once

#include "ingo/search_core.hpp"

namespace ingo {

// Coupled logistic-sine map applied as a one-shot transform of a seed in
// [0, 1). Output range is [-0.70710678..., 1.0]; the minimum sits at
// seed 0.5 where the inner term peaks at 1.25.
double coupled_map(double seed_value);

// N x dim matrix of coupled-map outputs, stored row-major (one row per
// agent, seeds drawn agent-major from rng).
struct ChaoticMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

ChaoticMatrix chaotic_matrix(std::size_t rows, std::size_t cols, RngStream& rng);

// Chaotic-map population initialization: seeds -> map outputs z ->
// positions lower + |z| * (upper - lower). Fitness left unevaluated.
Population dcmis_init(const SearchSpace& space, std::size_t n, RngStream& rng);

// One chaotic disturbance value: coupled_map of a fresh uniform seed.
double chaotic_disturbance(RngStream& rng);

} // namespace ingo
