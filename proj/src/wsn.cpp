#include "ingo/wsn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ingo {

namespace {

// Union-find over node indices.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

void WsnScenario::validate() const {
    if (!(length > 0.0) || !(width > 0.0))
        throw std::invalid_argument("wsn scenario: area dimensions must be positive");
    if (node_count < 1) throw std::invalid_argument("wsn scenario: needs at least one node");
    if (!(sensing_radius > 0.0) || !(comm_radius > 0.0) || !(grid_step > 0.0))
        throw std::invalid_argument("wsn scenario: radii and grid step must be positive");
    if (comm_radius < 2.0 * sensing_radius)
        throw std::invalid_argument("wsn scenario: requires Rc >= 2R for seamless connectivity");
    if (grid_step > std::min(length, width))
        throw std::invalid_argument("wsn scenario: grid step exceeds the monitoring area");
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int sensing_indicator(Point node, Point target, double sensing_radius) {
    return distance(node, target) <= sensing_radius ? 1 : 0;
}

int joint_detection(const Deployment& deployment, Point target, double sensing_radius) {
    double miss_product = 1.0;
    for (const Point& node : deployment.nodes)
        miss_product *= 1.0 - sensing_indicator(node, target, sensing_radius);
    return miss_product == 0.0 ? 1 : 0;
}

CoverageGrid make_coverage_grid(const WsnScenario& scenario) {
    scenario.validate();
    CoverageGrid grid;
    grid.nx = static_cast<std::size_t>(std::floor(scenario.length / scenario.grid_step));
    grid.ny = static_cast<std::size_t>(std::floor(scenario.width / scenario.grid_step));
    if (grid.nx == 0 || grid.ny == 0)
        throw std::invalid_argument("wsn scenario: grid step leaves no monitoring points");
    grid.points.reserve(grid.nx * grid.ny);
    for (std::size_t ky = 0; ky < grid.ny; ++ky)
        for (std::size_t kx = 0; kx < grid.nx; ++kx)
            grid.points.push_back({scenario.grid_step / 2.0 + static_cast<double>(kx) * scenario.grid_step,
                                   scenario.grid_step / 2.0 + static_cast<double>(ky) * scenario.grid_step});
    grid.covered.assign(grid.points.size(), 0);
    return grid;
}

void mark_covered(CoverageGrid& grid, const Deployment& deployment, double sensing_radius) {
    for (std::size_t p = 0; p < grid.points.size(); ++p)
        grid.covered[p] =
            static_cast<std::uint8_t>(joint_detection(deployment, grid.points[p], sensing_radius));
}

double coverage_rate(const Deployment& deployment, const WsnScenario& scenario) {
    CoverageEvaluator evaluator(scenario);
    return evaluator.rate(deployment);
}

Deployment decode_deployment(std::span<const double> x, const WsnScenario& scenario) {
    if (x.size() != 2 * scenario.node_count)
        throw std::invalid_argument("decode_deployment: expected " +
                                    std::to_string(2 * scenario.node_count) + " coordinates");
    Deployment deployment;
    deployment.nodes.reserve(scenario.node_count);
    for (std::size_t i = 0; i < scenario.node_count; ++i)
        deployment.nodes.push_back({x[2 * i], x[2 * i + 1]});
    return deployment;
}

std::vector<double> encode_deployment(const Deployment& deployment) {
    std::vector<double> x;
    x.reserve(2 * deployment.nodes.size());
    for (const Point& node : deployment.nodes) {
        x.push_back(node.x);
        x.push_back(node.y);
    }
    return x;
}

SearchSpace deployment_space(const WsnScenario& scenario) {
    std::vector<double> lower(2 * scenario.node_count, 0.0);
    std::vector<double> upper(2 * scenario.node_count);
    for (std::size_t i = 0; i < scenario.node_count; ++i) {
        upper[2 * i] = scenario.length;
        upper[2 * i + 1] = scenario.width;
    }
    return SearchSpace(std::move(lower), std::move(upper));
}

Objective coverage_objective(const WsnScenario& scenario) {
    auto evaluator = std::make_shared<CoverageEvaluator>(scenario);
    return [evaluator](std::span<const double> x) {
        return 1.0 - evaluator->rate_from_vector(x);
    };
}

ConnectivityReport connectivity_rate(const Deployment& deployment, const WsnScenario& scenario) {
    const std::size_t n = deployment.nodes.size();
    DisjointSet components(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(deployment.nodes[i], deployment.nodes[j]) < scenario.comm_radius)
                components.unite(i, j);

    std::vector<std::size_t> size_of_root(n, 0);
    for (std::size_t i = 0; i < n; ++i) ++size_of_root[components.find(i)];

    ConnectivityReport report;
    for (std::size_t s : size_of_root)
        if (s > 0) report.component_sizes.push_back(s);
    report.largest = *std::max_element(report.component_sizes.begin(), report.component_sizes.end());
    report.eta = static_cast<double>(report.largest) / static_cast<double>(n);
    return report;
}

CoverageEvaluator::CoverageEvaluator(const WsnScenario& scenario) : scenario_(scenario) {
    scenario_.validate();
    nx_ = static_cast<std::size_t>(std::floor(scenario_.length / scenario_.grid_step));
    ny_ = static_cast<std::size_t>(std::floor(scenario_.width / scenario_.grid_step));
    if (nx_ == 0 || ny_ == 0)
        throw std::invalid_argument("wsn scenario: grid step leaves no monitoring points");
    stamp_.assign(nx_ * ny_, 0);
}

double CoverageEvaluator::rate(const Deployment& deployment) {
    const double step = scenario_.grid_step;
    const double radius = scenario_.sensing_radius;
    const double radius_sq = radius * radius;
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;

    const auto cell_range = [&](double center, std::size_t cells) {
        // Candidate cell indices whose center can lie within the radius,
        // widened one cell each side before the exact distance test.
        const double lo = (center - radius - step / 2.0) / step;
        const double hi = (center + radius - step / 2.0) / step;
        const std::ptrdiff_t k_lo = static_cast<std::ptrdiff_t>(std::floor(lo)) - 1;
        const std::ptrdiff_t k_hi = static_cast<std::ptrdiff_t>(std::ceil(hi)) + 1;
        return std::pair<std::size_t, std::size_t>{
            static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, k_lo)),
            static_cast<std::size_t>(
                std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(cells) - 1, k_hi))};
    };

    std::size_t covered = 0;
    for (const Point& node : deployment.nodes) {
        const auto [kx_lo, kx_hi] = cell_range(node.x, nx_);
        const auto [ky_lo, ky_hi] = cell_range(node.y, ny_);
        for (std::size_t ky = ky_lo; ky <= ky_hi; ++ky) {
            const double py = step / 2.0 + static_cast<double>(ky) * step;
            const double dy = py - node.y;
            for (std::size_t kx = kx_lo; kx <= kx_hi; ++kx) {
                std::uint32_t& mark = stamp_[ky * nx_ + kx];
                if (mark == epoch_) continue;
                const double px = step / 2.0 + static_cast<double>(kx) * step;
                const double dx = px - node.x;
                if (dx * dx + dy * dy <= radius_sq) {
                    mark = epoch_;
                    ++covered;
                }
            }
        }
    }
    return static_cast<double>(covered) / static_cast<double>(nx_ * ny_);
}

double CoverageEvaluator::rate_from_vector(std::span<const double> x) {
    return rate(decode_deployment(x, scenario_));
}

} // namespace ingo
