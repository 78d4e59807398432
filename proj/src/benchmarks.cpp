#include "ingo/benchmarks.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <numbers>

namespace ingo {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

double f1_sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double f2_schwefel_222(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double f3_schwefel_12(std::span<const double> x) {
    double s = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double f4_schwefel_221(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double f5_rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        s += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
    return s;
}

double f6_step(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += sq(std::floor(v + 0.5));
    return s;
}

double f7_quartic_noise(std::span<const double> x, RngStream* noise) {
    if (!noise) throw std::invalid_argument("F7 needs a noise stream");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<double>(i + 1) * sq(sq(x[i]));
    return s + noise->uniform();
}

double f8_schwefel(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

double f9_rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

double f10_ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 +
           std::numbers::e;
}

double f11_griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double f12_penalized(std::span<const double> x) {
    const std::size_t n = x.size();
    const auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * sq(std::sin(kPi * y(0)));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(y(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * y(i + 1))));
    s += sq(y(n - 1) - 1.0);
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
    return kPi / static_cast<double>(n) * s + pen;
}

double f13_penalized2(std::span<const double> x) {
    const std::size_t n = x.size();
    double s = sq(std::sin(3.0 * kPi * x[0]));
    for (std::size_t i = 0; i + 1 < n; ++i)
        s += sq(x[i] - 1.0) * (1.0 + sq(std::sin(3.0 * kPi * x[i + 1])));
    s += sq(x[n - 1] - 1.0) * (1.0 + sq(std::sin(2.0 * kPi * x[n - 1])));
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * s + pen;
}

// Shekel's foxholes grid: first row cycles {-32,-16,0,16,32}, second row
// steps through the same values every five columns.
double foxholes_a(std::size_t row, std::size_t col) {
    static constexpr std::array<double, 5> base = {-32.0, -16.0, 0.0, 16.0, 32.0};
    return row == 0 ? base[col % 5] : base[col / 5];
}

double f14_foxholes(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t j = 0; j < 25; ++j) {
        double d = static_cast<double>(j + 1);
        for (std::size_t i = 0; i < 2; ++i) {
            const double diff = x[i] - foxholes_a(i, j);
            d += diff * diff * diff * diff * diff * diff;
        }
        s += 1.0 / d;
    }
    return 1.0 / (1.0 / 500.0 + s);
}

// Kowalik data: measured values a_i and inverse rates 1/b_i.
constexpr std::array<double, 11> kKowalikA = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
constexpr std::array<double, 11> kKowalikBInv = {0.25, 0.5, 1.0, 2.0,  4.0,  6.0,
                                                 8.0,  10.0, 12.0, 14.0, 16.0};

double f15_kowalik(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < 11; ++i) {
        const double b = 1.0 / kKowalikBInv[i];
        const double model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += sq(kKowalikA[i] - model);
    }
    return s;
}

std::vector<BenchmarkSpec> build_specs() {
    std::vector<BenchmarkSpec> specs;
    const auto zeros = [](std::size_t d) { return std::vector<double>(d, 0.0); };
    const auto ones = [](std::size_t d, double v) { return std::vector<double>(d, v); };
    specs.push_back({BenchmarkId::F1, "F1", 30, 30.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F2, "F2", 30, 10.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F3, "F3", 30, 100.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F4, "F4", 30, 100.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F5, "F5", 30, 30.0, 0.0, ones(30, 1.0)});
    specs.push_back({BenchmarkId::F6, "F6", 30, 100.0, 0.0, zeros(30)});
    // F7: additive noise, no deterministic optimum value to pin.
    specs.push_back({BenchmarkId::F7, "F7", 30, 1.28, std::nullopt, std::nullopt});
    // Value at 420.9687 * ones; independently computed at 30 digits.
    specs.push_back({BenchmarkId::F8, "F8", 30, 500.0, -12569.486618164875, ones(30, 420.9687)});
    specs.push_back({BenchmarkId::F9, "F9", 30, 5.12, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F10, "F10", 30, 32.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F11, "F11", 30, 600.0, 0.0, zeros(30)});
    specs.push_back({BenchmarkId::F12, "F12", 30, 50.0, 0.0, ones(30, -1.0)});
    specs.push_back({BenchmarkId::F13, "F13", 30, 50.0, 0.0, ones(30, 1.0)});
    specs.push_back(
        {BenchmarkId::F14, "F14", 2, 65.0, 0.9980038388186489, std::vector<double>{-32.0, -32.0}});
    specs.push_back({BenchmarkId::F15, "F15", 4, 5.0, 3.0748598865587288e-4,
                     std::vector<double>{0.192833, 0.190836, 0.123117, 0.135766}});
    return specs;
}

const std::vector<BenchmarkSpec>& specs() {
    static const std::vector<BenchmarkSpec> s = build_specs();
    return s;
}

} // namespace

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

const BenchmarkSpec& benchmark_spec(BenchmarkId id) {
    const auto idx = static_cast<std::size_t>(id);
    if (idx >= specs().size()) throw std::invalid_argument("unknown benchmark id");
    return specs()[idx];
}

std::string benchmark_name(BenchmarkId id) { return benchmark_spec(id).name; }

BenchmarkId benchmark_from_name(const std::string& name) {
    for (const auto& spec : specs())
        if (spec.name == name) return spec.id;
    throw std::invalid_argument("unknown benchmark name: " + name);
}

double evaluate_benchmark(BenchmarkId id, std::span<const double> x, RngStream* noise) {
    const BenchmarkSpec& spec = benchmark_spec(id);
    if (x.size() != spec.dim)
        throw std::invalid_argument(spec.name + ": expected dimension " + std::to_string(spec.dim));
    switch (id) {
        case BenchmarkId::F1: return f1_sphere(x);
        case BenchmarkId::F2: return f2_schwefel_222(x);
        case BenchmarkId::F3: return f3_schwefel_12(x);
        case BenchmarkId::F4: return f4_schwefel_221(x);
        case BenchmarkId::F5: return f5_rosenbrock(x);
        case BenchmarkId::F6: return f6_step(x);
        case BenchmarkId::F7: return f7_quartic_noise(x, noise);
        case BenchmarkId::F8: return f8_schwefel(x);
        case BenchmarkId::F9: return f9_rastrigin(x);
        case BenchmarkId::F10: return f10_ackley(x);
        case BenchmarkId::F11: return f11_griewank(x);
        case BenchmarkId::F12: return f12_penalized(x);
        case BenchmarkId::F13: return f13_penalized2(x);
        case BenchmarkId::F14: return f14_foxholes(x);
        case BenchmarkId::F15: return f15_kowalik(x);
    }
    throw std::invalid_argument("unknown benchmark id");
}

Objective make_benchmark_objective(BenchmarkId id, std::uint64_t noise_seed) {
    if (id == BenchmarkId::F7) {
        auto stream = std::make_shared<RngStream>(noise_seed);
        return [stream](std::span<const double> x) {
            return evaluate_benchmark(BenchmarkId::F7, x, stream.get());
        };
    }
    return [id](std::span<const double> x) { return evaluate_benchmark(id, x); };
}

} // namespace ingo
