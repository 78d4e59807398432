#pragma once

#include <cstdint>
#include <memory>

#include "ingo/search_core.hpp"

namespace ingo {

// Monitoring-area geometry and radii. The Rc >= 2R constraint makes
// overlapping sensing discs imply a communication link.
struct WsnScenario {
    double length = 50.0;
    double width = 50.0;
    std::size_t node_count = 35;
    double sensing_radius = 5.0;
    double comm_radius = 10.0;
    double grid_step = 0.8;

    void validate() const;

    bool operator==(const WsnScenario&) const = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Deployment {
    std::vector<Point> nodes;
};

// Cell-center monitoring points: x = step/2 + k*step for
// k = 0 .. floor(length/step)-1, same along y. A trailing strip narrower
// than one cell is excluded.
struct CoverageGrid {
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<Point> points;
    std::vector<std::uint8_t> covered;
};

struct ConnectivityReport {
    std::vector<std::size_t> component_sizes;
    std::size_t largest = 0;
    double eta = 0.0;
};

double distance(Point a, Point b);

// Boolean sensing: 1 iff distance(node, target) <= R.
int sensing_indicator(Point node, Point target, double sensing_radius);

// 1 - prod(1 - p_i): under the Boolean model, 1 iff any node covers target.
int joint_detection(const Deployment& deployment, Point target, double sensing_radius);

// Grid with all points uncovered. Throws when the step exceeds either side.
CoverageGrid make_coverage_grid(const WsnScenario& scenario);

// Per-point joint detection over the whole grid.
void mark_covered(CoverageGrid& grid, const Deployment& deployment, double sensing_radius);

// Fraction of grid points detected by at least one node.
double coverage_rate(const Deployment& deployment, const WsnScenario& scenario);

// Interleaved (x0, y0, x1, y1, ...) decoding; length must equal 2 * node_count.
Deployment decode_deployment(std::span<const double> x, const WsnScenario& scenario);
std::vector<double> encode_deployment(const Deployment& deployment);

// Box [0, L] x [0, M] per node, interleaved to match decode_deployment.
SearchSpace deployment_space(const WsnScenario& scenario);

// Minimization objective f(x) = 1 - coverage_rate(decode(x)). Each closure
// owns its evaluation scratch, so use one per concurrent run.
Objective coverage_objective(const WsnScenario& scenario);

// Undirected components under the strict distance < Rc link rule;
// eta = largest component / node count.
ConnectivityReport connectivity_rate(const Deployment& deployment, const WsnScenario& scenario);

// Grid-backed coverage computation with per-node bounding boxes; exact
// (every candidate point still passes the distance test) but much cheaper
// than the all-pairs scan for realistic radii.
class CoverageEvaluator {
public:
    explicit CoverageEvaluator(const WsnScenario& scenario);

    double rate(const Deployment& deployment);
    double rate_from_vector(std::span<const double> x);

    const WsnScenario& scenario() const { return scenario_; }

private:
    WsnScenario scenario_;
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamp_;
};

} // namespace ingo
