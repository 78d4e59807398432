#include "ingo/stats.hpp"

#include <algorithm>
#include <cmath>

namespace ingo {

TrialStats aggregate_stats(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("aggregate_stats: empty value list");
    TrialStats stats;
    stats.runs = values.size();
    stats.best = *std::min_element(values.begin(), values.end());
    stats.worst = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
        stats.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return stats;
}

} // namespace ingo
