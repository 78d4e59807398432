#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "ingo/chaos.hpp"

using namespace ingo;

TEST_CASE("coupled_map matches direct evaluation") {
    CHECK(coupled_map(0.0) == 0.0);
    // sin(1.25*pi): inner term 0.25 + 1 peaks at seed 0.5.
    CHECK(coupled_map(0.5) == doctest::Approx(-0.70710678118654752).epsilon(1e-14));
    CHECK(coupled_map(0.25) == doctest::Approx(0.32508590152616583).epsilon(1e-14));
    CHECK_THROWS_AS(coupled_map(1.0), std::invalid_argument);
    CHECK_THROWS_AS(coupled_map(-0.1), std::invalid_argument);
}

TEST_CASE("coupled_map range over a dense seed grid") {
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 100000; ++i) {
        const double z = coupled_map(static_cast<double>(i) / 100000.0);
        lo = std::min(lo, z);
        hi = std::max(hi, z);
        REQUIRE(z >= -0.7072);
        REQUIRE(z <= 1.0);
    }
    // The map actually reaches both ends of its analytic range.
    CHECK(lo == doctest::Approx(-0.70710678).epsilon(1e-6));
    CHECK(hi > 0.999);
}

TEST_CASE("chaotic_disturbance stays within the map range") {
    RngStream rng(404);
    for (int i = 0; i < 100000; ++i) {
        const double z = chaotic_disturbance(rng);
        REQUIRE(z >= -0.7072);
        REQUIRE(z <= 1.0);
    }
}

TEST_CASE("dcmis_init output lies inside the search space") {
    SearchSpace space({-10.0, 0.0, 5.0}, {10.0, 1.0, 6.0});
    RngStream rng(2024);
    const auto pop = dcmis_init(space, 50, rng);
    REQUIRE(pop.size() == 50);
    for (const auto& agent : pop.agents) {
        CHECK(space.contains(agent.position));
        CHECK_FALSE(agent.evaluated);
    }
    CHECK_THROWS_AS(dcmis_init(space, 4, rng), std::invalid_argument);
}

TEST_CASE("dcmis_init is deterministic per seed") {
    SearchSpace space({0.0, 0.0}, {1.0, 1.0});
    RngStream a(9), b(9), c(10);
    const auto pa = dcmis_init(space, 20, a);
    const auto pb = dcmis_init(space, 20, b);
    const auto pc = dcmis_init(space, 20, c);
    bool any_difference = false;
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(pa.agents[i].position == pb.agents[i].position);
        if (pa.agents[i].position != pc.agents[i].position) any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("dcmis_init fills every coordinate decile") {
    // Bin-count oracle: 1000 agents in [0,1]^2 should leave no empty
    // tenth-width bin in either dimension.
    SearchSpace space({0.0, 0.0}, {1.0, 1.0});
    RngStream rng(77);
    const auto pop = dcmis_init(space, 1000, rng);
    for (std::size_t dim = 0; dim < 2; ++dim) {
        std::array<int, 10> bins{};
        for (const auto& agent : pop.agents) {
            auto b = static_cast<std::size_t>(agent.position[dim] * 10.0);
            if (b == 10) b = 9;
            ++bins[b];
        }
        for (int count : bins) CHECK(count > 0);
    }
}

TEST_CASE("dcmis_init spread reaches both ends of the unit box") {
    SearchSpace space({0.0}, {1.0});
    RngStream rng(31337);
    const auto pop = dcmis_init(space, 1000, rng);
    double lo = 1.0, hi = 0.0;
    for (const auto& agent : pop.agents) {
        lo = std::min(lo, agent.position[0]);
        hi = std::max(hi, agent.position[0]);
    }
    CHECK(lo < 0.05);
    CHECK(hi > 0.95);
}

TEST_CASE("chaotic matrix entries equal the map of the seed draws") {
    RngStream rng_matrix(55), rng_reference(55);
    const auto matrix = chaotic_matrix(4, 3, rng_matrix);
    REQUIRE(matrix.values.size() == 12);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(matrix.at(r, c) == coupled_map(rng_reference.uniform()));
}
