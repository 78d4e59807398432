#pragma once

#include <array>
#include <optional>
#include <string>

#include "ingo/search_core.hpp"

namespace ingo {

enum class BenchmarkId {
    F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15,
};

inline constexpr std::array<BenchmarkId, 15> kAllBenchmarks = {
    BenchmarkId::F1,  BenchmarkId::F2,  BenchmarkId::F3,  BenchmarkId::F4,  BenchmarkId::F5,
    BenchmarkId::F6,  BenchmarkId::F7,  BenchmarkId::F8,  BenchmarkId::F9,  BenchmarkId::F10,
    BenchmarkId::F11, BenchmarkId::F12, BenchmarkId::F13, BenchmarkId::F14, BenchmarkId::F15,
};

struct BenchmarkSpec {
    BenchmarkId id;
    std::string name;
    std::size_t dim;
    double half_range; // symmetric box [-half_range, half_range]^dim
    std::optional<double> known_optimum_value;
    std::optional<std::vector<double>> known_optimizer;

    SearchSpace space() const { return SearchSpace::symmetric(dim, half_range); }
};

// Immutable metadata for one benchmark. Throws on unknown id.
const BenchmarkSpec& benchmark_spec(BenchmarkId id);

std::string benchmark_name(BenchmarkId id);
BenchmarkId benchmark_from_name(const std::string& name);

// Evaluates the benchmark at x. F7 adds a fresh uniform [0,1) noise term
// per call and therefore needs a stream; the others ignore it.
double evaluate_benchmark(BenchmarkId id, std::span<const double> x, RngStream* noise = nullptr);

// Penalty term shared by F12/F13: 0 inside [-a, a], k*(|x|-a)^m outside.
double penalty_u(double x, double a, double k, double m);

// Objective closure bound to one benchmark; F7 draws its noise from the
// given stream (shared_ptr keeps the stream alive inside the closure).
Objective make_benchmark_objective(BenchmarkId id, std::uint64_t noise_seed);

} // namespace ingo
