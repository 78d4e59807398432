#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ingo/baselines.hpp"
#include "ingo/benchmarks.hpp"
#include "ingo/ngo.hpp"

using namespace ingo;

namespace {

Objective sphere() {
    return [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
}

void check_monotone(const RunResult& result) {
    for (std::size_t t = 1; t < result.curve.size(); ++t)
        REQUIRE(result.curve[t] <= result.curve[t - 1]);
    REQUIRE(result.best_fitness == result.curve.back());
}

} // namespace

TEST_CASE("abc solves the 2-d sphere") {
    BaselineConfig config;
    config.n = 30;
    config.t_max = 200;
    config.seed = 11;
    SearchSpace space = SearchSpace::symmetric(2, 30.0);
    const RunResult result = abc_run(config, sphere(), space);
    CHECK(result.best_fitness < 1e-2);
    check_monotone(result);
    CHECK(space.contains(result.best_position));
}

TEST_CASE("abc is deterministic per seed") {
    BaselineConfig config;
    config.n = 10;
    config.t_max = 50;
    config.seed = 5;
    SearchSpace space = SearchSpace::symmetric(3, 5.0);
    const RunResult a = abc_run(config, sphere(), space);
    const RunResult b = abc_run(config, sphere(), space);
    CHECK(a.curve == b.curve);
    CHECK(a.best_position == b.best_position);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("fa solves the 2-d sphere") {
    BaselineConfig config;
    config.n = 30;
    config.t_max = 200;
    config.seed = 21;
    SearchSpace space = SearchSpace::symmetric(2, 30.0);
    const RunResult result = fa_run(config, sphere(), space);
    CHECK(result.best_fitness < 1e-2);
    check_monotone(result);
    CHECK(space.contains(result.best_position));
}

TEST_CASE("fa attraction vanishes for huge gamma") {
    // With the attraction term numerically dead, each move is bounded by
    // the random-walk term alone.
    BaselineConfig config;
    config.n = 6;
    config.t_max = 1;
    config.seed = 31;
    config.fa_alpha = 1e-6;
    config.fa_gamma = 1e12;
    SearchSpace space = SearchSpace::symmetric(2, 100.0);

    RngStream init_replay(config.seed);
    const Population initial = uniform_init(space, config.n, init_replay);

    const RunResult result = fa_run(config, sphere(), space);
    (void)result;
    // Rerun while recording evaluated positions: every evaluated position
    // must sit within the random-term envelope of its initial position.
    std::vector<std::vector<double>> seen;
    Objective recording = [&seen](std::span<const double> x) {
        seen.emplace_back(x.begin(), x.end());
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    };
    fa_run(config, recording, space);
    REQUIRE(seen.size() == 2 * config.n); // init + one sweep
    const double envelope = (config.n - 1) * config.fa_alpha * 0.5 * 200.0 + 1e-12;
    for (std::size_t i = 0; i < config.n; ++i) {
        for (std::size_t d = 0; d < 2; ++d) {
            const double drift = std::abs(seen[config.n + i][d] - initial.agents[i].position[d]);
            CHECK(drift <= envelope);
        }
    }
}

TEST_CASE("fa is deterministic per seed") {
    BaselineConfig config;
    config.n = 8;
    config.t_max = 30;
    config.seed = 41;
    SearchSpace space = SearchSpace::symmetric(3, 5.0);
    const RunResult a = fa_run(config, sphere(), space);
    const RunResult b = fa_run(config, sphere(), space);
    CHECK(a.curve == b.curve);
    CHECK(a.best_position == b.best_position);
}

TEST_CASE("random search lands near the sphere optimum with 6000 samples") {
    BaselineConfig config;
    config.n = 30;
    config.t_max = 200;
    config.seed = 2;
    SearchSpace space = SearchSpace::symmetric(2, 30.0);
    const RunResult result = random_search_run(config, sphere(), space);
    CHECK(result.evaluations == 6000);
    CHECK(result.best_fitness < 1.0);
    check_monotone(result);
}

TEST_CASE("single-sample random search returns that sample") {
    BaselineConfig config;
    config.n = 1;
    config.t_max = 1;
    config.seed = 123;
    SearchSpace space({-3.0, 2.0}, {-1.0, 8.0});

    RngStream replay(config.seed);
    std::vector<double> expected(2);
    for (std::size_t j = 0; j < 2; ++j)
        expected[j] = space.lower[j] + replay.uniform() * (space.upper[j] - space.lower[j]);

    const RunResult result = random_search_run(config, sphere(), space);
    CHECK(result.best_position == expected);
    CHECK(result.best_fitness == expected[0] * expected[0] + expected[1] * expected[1]);
    CHECK(result.curve.size() == 1);
}

TEST_CASE("random search is deterministic per seed") {
    BaselineConfig config;
    config.n = 5;
    config.t_max = 20;
    config.seed = 9;
    SearchSpace space = SearchSpace::symmetric(4, 2.0);
    const RunResult a = random_search_run(config, sphere(), space);
    const RunResult b = random_search_run(config, sphere(), space);
    CHECK(a.curve == b.curve);
    CHECK(a.best_position == b.best_position);
}

TEST_CASE("baseline config validation") {
    BaselineConfig config;
    config.n = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.n = 5;
    config.fa_gamma = -1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.fa_gamma = 0.0;
    CHECK_NOTHROW(config.validate());
    BaselineConfig tiny;
    tiny.n = 1;
    SearchSpace space = SearchSpace::symmetric(2, 1.0);
    CHECK_THROWS_AS(abc_run(tiny, sphere(), space), std::invalid_argument);
    CHECK_THROWS_AS(fa_run(tiny, sphere(), space), std::invalid_argument);
}

TEST_CASE("INGO dominates the baselines on the 30-d sphere") {
    const SearchSpace space = benchmark_spec(BenchmarkId::F1).space();
    const Objective objective = make_benchmark_objective(BenchmarkId::F1, 0);
    double ingo_sum = 0.0, abc_sum = 0.0, fa_sum = 0.0, random_sum = 0.0;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        OptimizerConfig ingo_config;
        ingo_config.n = 30;
        ingo_config.t_max = 500;
        ingo_config.seed = seed;
        ingo_config.flags = {true, true};
        ingo_sum += run(ingo_config, objective, space).best_fitness;

        BaselineConfig baseline;
        baseline.n = 30;
        baseline.t_max = 500;
        baseline.seed = seed;
        abc_sum += abc_run(baseline, objective, space).best_fitness;
        fa_sum += fa_run(baseline, objective, space).best_fitness;
        random_sum += random_search_run(baseline, objective, space).best_fitness;
    }
    CHECK(ingo_sum / 10.0 < abc_sum / 10.0);
    CHECK(ingo_sum / 10.0 < fa_sum / 10.0);
    CHECK(ingo_sum / 10.0 < random_sum / 10.0);
}
