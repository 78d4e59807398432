#pragma once

#include <span>
#include <stdexcept>

namespace ingo {

// Best / worst / mean / sample standard deviation over one trial batch,
// minimization orientation (best == minimum).
struct TrialStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double std = 0.0;
    std::size_t runs = 0;
};

// Exact statistics with the n-1 denominator; std is 0 for a single value.
// Throws std::invalid_argument on empty input.
TrialStats aggregate_stats(std::span<const double> values);

} // namespace ingo
