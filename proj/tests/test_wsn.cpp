#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ingo/wsn.hpp"

using namespace ingo;

namespace {

WsnScenario small_scenario() {
    WsnScenario scenario;
    scenario.length = 10.0;
    scenario.width = 10.0;
    scenario.node_count = 1;
    scenario.sensing_radius = 5.0;
    scenario.comm_radius = 10.0;
    scenario.grid_step = 1.0;
    return scenario;
}

// Brute-force reference: fraction of cell centers whose nearest node is
// within the sensing radius.
double brute_force_coverage(const Deployment& deployment, const WsnScenario& scenario) {
    const std::size_t nx = static_cast<std::size_t>(std::floor(scenario.length / scenario.grid_step));
    const std::size_t ny = static_cast<std::size_t>(std::floor(scenario.width / scenario.grid_step));
    std::size_t covered = 0;
    for (std::size_t ky = 0; ky < ny; ++ky) {
        for (std::size_t kx = 0; kx < nx; ++kx) {
            const Point p{scenario.grid_step / 2.0 + static_cast<double>(kx) * scenario.grid_step,
                          scenario.grid_step / 2.0 + static_cast<double>(ky) * scenario.grid_step};
            double min_d = 1e300;
            for (const Point& node : deployment.nodes) min_d = std::min(min_d, distance(node, p));
            if (min_d <= scenario.sensing_radius) ++covered;
        }
    }
    return static_cast<double>(covered) / static_cast<double>(nx * ny);
}

// Reachability oracle: repeated relaxation over the adjacency matrix.
std::vector<std::size_t> reachability_components(const Deployment& deployment, double comm_radius) {
    const std::size_t n = deployment.nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && distance(deployment.nodes[i], deployment.nodes[j]) < comm_radius)
                reach[i][j] = true;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][j])
                    for (std::size_t k = 0; k < n; ++k)
                        if (reach[j][k] && !reach[i][k]) {
                            reach[i][k] = true;
                            changed = true;
                        }
    }
    std::vector<std::size_t> label(n, n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] != n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j]) label[j] = next;
        ++next;
    }
    std::vector<std::size_t> sizes(next, 0);
    for (std::size_t i = 0; i < n; ++i) ++sizes[label[i]];
    return sizes;
}

} // namespace

TEST_CASE("euclidean distance basics") {
    CHECK(distance({0.0, 0.0}, {3.0, 4.0}) == 5.0);
    CHECK(distance({2.5, -1.0}, {2.5, -1.0}) == 0.0);
    CHECK(distance({0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(std::sqrt(2.0)));
    RngStream rng(3);
    for (int i = 0; i < 100; ++i) {
        const Point a{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        const Point b{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
        CHECK(distance(a, b) == distance(b, a));
    }
}

TEST_CASE("boolean sensing includes the boundary") {
    CHECK(sensing_indicator({0.0, 0.0}, {5.0, 0.0}, 5.0) == 1);
    CHECK(sensing_indicator({0.0, 0.0}, {5.0001, 0.0}, 5.0) == 0);
    CHECK(sensing_indicator({2.0, 2.0}, {2.0, 2.0}, 1.0) == 1);
}

TEST_CASE("joint detection is the complement of the all-miss product") {
    Deployment deployment{{{0.0, 0.0}, {10.0, 10.0}}};
    CHECK(joint_detection(deployment, {1.0, 0.0}, 2.0) == 1);  // first node covers
    CHECK(joint_detection(deployment, {5.0, 5.0}, 2.0) == 0);  // nobody covers
    CHECK(joint_detection(deployment, {5.0, 5.0}, 20.0) == 1); // everyone covers
}

TEST_CASE("scenario validation catches bad radii and grid steps") {
    WsnScenario scenario = small_scenario();
    scenario.comm_radius = 8.0;
    scenario.sensing_radius = 5.0;
    CHECK_THROWS_WITH_AS(scenario.validate(),
                         "wsn scenario: requires Rc >= 2R for seamless connectivity",
                         std::invalid_argument);
    scenario = small_scenario();
    scenario.grid_step = 11.0;
    CHECK_THROWS_AS(scenario.validate(), std::invalid_argument);
    scenario = small_scenario();
    scenario.node_count = 0;
    CHECK_THROWS_AS(scenario.validate(), std::invalid_argument);
    CHECK_NOTHROW(small_scenario().validate());
}

TEST_CASE("grid uses cell centers and drops the residual strip") {
    WsnScenario scenario;
    scenario.length = 50.0;
    scenario.width = 50.0;
    scenario.grid_step = 0.8;
    const CoverageGrid grid = make_coverage_grid(scenario);
    CHECK(grid.nx == 62);
    CHECK(grid.ny == 62);
    CHECK(grid.points.size() == 3844);
    CHECK(grid.points[0].x == doctest::Approx(0.4));
    CHECK(grid.points[0].y == doctest::Approx(0.4));
    CHECK(grid.points[1].x == doctest::Approx(1.2));
    CHECK(grid.points.back().x == doctest::Approx(0.4 + 61 * 0.8));
}

TEST_CASE("coverage for a dominating radius is total") {
    WsnScenario scenario = small_scenario();
    scenario.sensing_radius = 10.0;
    scenario.comm_radius = 20.0;
    Deployment deployment{{{5.0, 5.0}}};
    CHECK(coverage_rate(deployment, scenario) == 1.0);
}

TEST_CASE("coverage for a radius-5 disc matches the brute-force count") {
    WsnScenario scenario = small_scenario();
    Deployment deployment{{{5.0, 5.0}}};
    const double expected = brute_force_coverage(deployment, scenario);
    CHECK(coverage_rate(deployment, scenario) == expected);
    CHECK(expected > 0.5);
    CHECK(expected < 1.0);
}

TEST_CASE("a node that reaches no cell center covers nothing") {
    WsnScenario scenario = small_scenario();
    scenario.sensing_radius = 0.2;
    scenario.comm_radius = 0.4;
    Deployment deployment{{{1.0, 1.0}}}; // cell corner, 0.707 from centers
    CHECK(coverage_rate(deployment, scenario) == 0.0);
}

TEST_CASE("deployment decoding and round trip") {
    WsnScenario scenario = small_scenario();
    scenario.node_count = 2;
    const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    const Deployment deployment = decode_deployment(x, scenario);
    REQUIRE(deployment.nodes.size() == 2);
    CHECK(deployment.nodes[0].x == 1.0);
    CHECK(deployment.nodes[0].y == 2.0);
    CHECK(deployment.nodes[1].x == 3.0);
    CHECK(deployment.nodes[1].y == 4.0);
    CHECK(encode_deployment(deployment) == x);

    const Deployment origin = decode_deployment(std::vector<double>(4, 0.0), scenario);
    for (const auto& node : origin.nodes) {
        CHECK(node.x == 0.0);
        CHECK(node.y == 0.0);
    }
    CHECK_THROWS_AS(decode_deployment(std::vector<double>{1.0}, scenario), std::invalid_argument);
}

TEST_CASE("deployment space interleaves length and width bounds") {
    WsnScenario scenario = small_scenario();
    scenario.length = 30.0;
    scenario.width = 20.0;
    scenario.node_count = 3;
    const SearchSpace space = deployment_space(scenario);
    REQUIRE(space.dim() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(space.lower[2 * i] == 0.0);
        CHECK(space.upper[2 * i] == 30.0);
        CHECK(space.upper[2 * i + 1] == 20.0);
    }
}

TEST_CASE("coverage objective maps coverage onto a minimization target") {
    WsnScenario scenario = small_scenario();
    const Objective objective = coverage_objective(scenario);
    // Dominating node -> full coverage -> objective 0.
    WsnScenario big = scenario;
    big.sensing_radius = 10.0;
    big.comm_radius = 20.0;
    CHECK(coverage_objective(big)(std::vector<double>{5.0, 5.0}) == 0.0);
    // Unreachable centers -> zero coverage -> objective 1.
    WsnScenario tiny = scenario;
    tiny.sensing_radius = 0.2;
    tiny.comm_radius = 0.4;
    CHECK(coverage_objective(tiny)(std::vector<double>{1.0, 1.0}) == 1.0);
    // Larger radius never increases the objective.
    RngStream rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x = {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
        WsnScenario narrow = scenario;
        narrow.sensing_radius = 2.0;
        narrow.comm_radius = 4.0;
        CHECK(coverage_objective(scenario)(x) <= coverage_objective(narrow)(x));
    }
}

TEST_CASE("adding a node never decreases coverage") {
    WsnScenario scenario = small_scenario();
    scenario.node_count = 3;
    RngStream rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Deployment two{{{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)},
                        {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)}}};
        Deployment three = two;
        three.nodes.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)});
        WsnScenario two_scenario = scenario;
        two_scenario.node_count = 2;
        CHECK(coverage_rate(three, scenario) >= coverage_rate(two, two_scenario));
    }
}

TEST_CASE("connectivity under the strict link rule") {
    WsnScenario scenario = small_scenario();
    scenario.node_count = 2;
    scenario.length = scenario.width = 50.0;

    ConnectivityReport close = connectivity_rate({{{0.0, 0.0}, {5.0, 5.0}}}, scenario);
    CHECK(close.component_sizes.size() == 1);
    CHECK(close.eta == 1.0);

    ConnectivityReport far = connectivity_rate({{{0.0, 0.0}, {30.0, 30.0}}}, scenario);
    CHECK(far.component_sizes.size() == 2);
    CHECK(far.largest == 1);
    CHECK(far.eta == 0.5);

    // Exactly Rc apart: strict inequality keeps them apart.
    ConnectivityReport edge = connectivity_rate({{{0.0, 0.0}, {10.0, 0.0}}}, scenario);
    CHECK(edge.component_sizes.size() == 2);

    scenario.node_count = 3;
    ConnectivityReport chain =
        connectivity_rate({{{0.0, 0.0}, {8.0, 0.0}, {16.0, 0.0}}}, scenario);
    CHECK(chain.component_sizes.size() == 1);
    CHECK(chain.eta == 1.0);
}

TEST_CASE("component sizes always sum to the node count") {
    WsnScenario scenario = small_scenario();
    scenario.length = scenario.width = 20.0;
    RngStream rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.index(10);
        Deployment deployment;
        for (std::size_t i = 0; i < n; ++i)
            deployment.nodes.push_back({rng.uniform(0.0, 20.0), rng.uniform(0.0, 20.0)});
        scenario.node_count = n;
        const ConnectivityReport report = connectivity_rate(deployment, scenario);
        std::size_t total = 0;
        for (std::size_t s : report.component_sizes) total += s;
        CHECK(total == n);
        CHECK(report.eta > 0.0);
        CHECK(report.eta <= 1.0);
        CHECK((report.eta == 1.0) == (report.component_sizes.size() == 1));
    }
}

TEST_CASE("coverage and connectivity match the exhaustive oracles") {
    RngStream rng(990);
    for (int trial = 0; trial < 100; ++trial) {
        WsnScenario scenario;
        scenario.length = 5.0 + rng.uniform() * 15.0;  // up to 20 x 20
        scenario.width = 5.0 + rng.uniform() * 15.0;
        scenario.grid_step = 1.0;
        scenario.sensing_radius = 0.5 + rng.uniform() * 3.0;
        scenario.comm_radius = 2.0 * scenario.sensing_radius + rng.uniform();
        scenario.node_count = 1 + rng.index(10);
        Deployment deployment;
        for (std::size_t i = 0; i < scenario.node_count; ++i)
            deployment.nodes.push_back(
                {rng.uniform(0.0, scenario.length), rng.uniform(0.0, scenario.width)});

        CHECK(coverage_rate(deployment, scenario) == brute_force_coverage(deployment, scenario));

        auto oracle_sizes = reachability_components(deployment, scenario.comm_radius);
        auto report = connectivity_rate(deployment, scenario);
        std::sort(oracle_sizes.begin(), oracle_sizes.end());
        auto sizes = report.component_sizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == oracle_sizes);
    }
}

TEST_CASE("evaluator scratch state does not leak between calls") {
    WsnScenario scenario = small_scenario();
    CoverageEvaluator evaluator(scenario);
    Deployment a{{{5.0, 5.0}}};
    Deployment b{{{0.0, 0.0}}};
    const double first_b = CoverageEvaluator(scenario).rate(b);
    evaluator.rate(a);
    CHECK(evaluator.rate(b) == first_b);
    evaluator.rate(a);
    CHECK(evaluator.rate(b) == first_b);
}

TEST_CASE("marking a grid agrees with per-point joint detection") {
    WsnScenario scenario = small_scenario();
    CoverageGrid grid = make_coverage_grid(scenario);
    Deployment deployment{{{3.0, 7.0}}};
    mark_covered(grid, deployment, scenario.sensing_radius);
    std::size_t covered = 0;
    for (std::size_t p = 0; p < grid.points.size(); ++p) {
        CHECK(grid.covered[p] ==
              joint_detection(deployment, grid.points[p], scenario.sensing_radius));
        covered += grid.covered[p];
    }
    CHECK(static_cast<double>(covered) / static_cast<double>(grid.points.size()) ==
          coverage_rate(deployment, scenario));
}
