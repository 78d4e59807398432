#include "ingo/outputs.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace ingo {

namespace {

using nlohmann::json;

bool is_wsn(const ExperimentReport& report) {
    return report.config.kind == ExperimentKind::Wsn;
}

// Coverage experiments are reported in coverage terms (1 - fitness).
double display_value(const ExperimentReport& report, double fitness) {
    return is_wsn(report) ? 1.0 - fitness : fitness;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary); // binary: no newline translation
    if (!out) throw std::runtime_error("cannot write output file: " + path.string());
    return out;
}

void write_stats_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "algorithm,objective,best,worst,mean,std,runs\n";
    for (const auto& cell : report.campaign.cells) {
        const TrialStats& s = cell.stats;
        const double best = display_value(report, s.best);
        const double worst = display_value(report, s.worst);
        const double mean = display_value(report, s.mean);
        out << cell.algorithm << ',' << cell.objective << ',' << format_double(best) << ','
            << format_double(worst) << ',' << format_double(mean) << ',' << format_double(s.std)
            << ',' << s.runs << '\n';
    }
}

void write_raw_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "algorithm,objective,trial,seed,value\n";
    for (const auto& cell : report.campaign.cells)
        for (std::size_t t = 0; t < cell.trials.size(); ++t)
            out << cell.algorithm << ',' << cell.objective << ',' << t << ','
                << cell.trials[t].seed << ','
                << format_double(display_value(report, cell.trials[t].result.best_fitness))
                << '\n';
}

void write_curves_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "algorithm,objective,trial,iteration,value\n";
    for (const auto& cell : report.campaign.cells)
        for (std::size_t t = 0; t < cell.trials.size(); ++t) {
            const auto& curve = cell.trials[t].result.curve;
            for (std::size_t it = 0; it < curve.size(); ++it)
                out << cell.algorithm << ',' << cell.objective << ',' << t << ',' << it + 1 << ','
                    << format_double(display_value(report, curve[it])) << '\n';
        }
}

void write_deployment_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "algorithm,node,x,y\n";
    for (const auto& summary : report.wsn)
        for (std::size_t i = 0; i < summary.best_deployment.nodes.size(); ++i)
            out << summary.algorithm << ',' << i << ','
                << format_double(summary.best_deployment.nodes[i].x) << ','
                << format_double(summary.best_deployment.nodes[i].y) << '\n';
}

void write_report_json(const ExperimentReport& report, const std::filesystem::path& path) {
    json root;
    root["config"] = json::parse(config_to_json(report.config));
    json results = json::array();
    for (const auto& cell : report.campaign.cells) {
        json entry;
        entry["algorithm"] = cell.algorithm;
        entry["objective"] = cell.objective;
        entry["stats"] = {{"best", display_value(report, cell.stats.best)},
                          {"worst", display_value(report, cell.stats.worst)},
                          {"mean", display_value(report, cell.stats.mean)},
                          {"std", cell.stats.std},
                          {"runs", cell.stats.runs}};
        entry["best_trial"] = cell.best_trial;
        json trials = json::array();
        for (std::size_t t = 0; t < cell.trials.size(); ++t) {
            const auto& trial = cell.trials[t];
            json tj;
            tj["trial"] = t;
            tj["seed"] = trial.seed;
            tj["value"] = display_value(report, trial.result.best_fitness);
            tj["evaluations"] = trial.result.evaluations;
            json curve = json::array();
            for (double v : trial.result.curve) curve.push_back(display_value(report, v));
            tj["curve"] = std::move(curve);
            trials.push_back(std::move(tj));
        }
        entry["trials"] = std::move(trials);
        results.push_back(std::move(entry));
    }
    root["results"] = std::move(results);

    if (is_wsn(report)) {
        json wsn = json::array();
        for (const auto& summary : report.wsn) {
            json sj;
            sj["algorithm"] = summary.algorithm;
            sj["best_seed"] = summary.best_seed;
            sj["best_coverage"] = summary.best_coverage;
            json nodes = json::array();
            for (const auto& node : summary.best_deployment.nodes)
                nodes.push_back(json::array({node.x, node.y}));
            sj["deployment"] = std::move(nodes);
            sj["connectivity"] = {{"component_sizes", summary.best_connectivity.component_sizes},
                                  {"largest", summary.best_connectivity.largest},
                                  {"eta", summary.best_connectivity.eta}};
            sj["trial_eta"] = summary.trial_eta;
            wsn.push_back(std::move(sj));
        }
        root["wsn"] = std::move(wsn);
    }
    if (!report.campaign.errors.empty()) root["errors"] = report.campaign.errors;

    auto out = open_out(path);
    out << root.dump(2) << '\n';
}

// --- minimal SVG rendering -------------------------------------------------

constexpr std::array<const char*, 7> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#17becf"};

std::string svg_num(double v) { return format_double(v); }

void write_deployment_svg(const WsnAlgorithmSummary& summary, const WsnScenario& scenario,
                          const std::filesystem::path& path) {
    const double L = scenario.length, M = scenario.width, R = scenario.sensing_radius;
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(-0.05 * L) << ' '
        << svg_num(-0.05 * M) << ' ' << svg_num(1.1 * L) << ' ' << svg_num(1.1 * M)
        << "\" width=\"660\" height=\"660\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << svg_num(L) << "\" height=\"" << svg_num(M)
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << svg_num(0.01 * L) << "\"/>\n";
    for (const auto& node : summary.best_deployment.nodes) {
        const double y = M - node.y; // svg y axis points down
        out << "<circle cx=\"" << svg_num(node.x) << "\" cy=\"" << svg_num(y) << "\" r=\""
            << svg_num(R) << "\" fill=\"#1f77b4\" fill-opacity=\"0.18\" stroke=\"#1f77b4\" "
               "stroke-width=\""
            << svg_num(0.004 * L) << "\"/>\n";
        out << "<circle cx=\"" << svg_num(node.x) << "\" cy=\"" << svg_num(y) << "\" r=\""
            << svg_num(0.008 * L) << "\" fill=\"#d62728\"/>\n";
    }
    out << "<text x=\"0\" y=\"" << svg_num(-0.015 * M) << "\" font-size=\"" << svg_num(0.03 * M)
        << "\">" << summary.algorithm << " coverage " << std::fixed << std::setprecision(2)
        << summary.best_coverage * 100.0 << "%</text>\n";
    out << "</svg>\n";
}

void write_connectivity_svg(const WsnAlgorithmSummary& summary, const WsnScenario& scenario,
                            const std::filesystem::path& path) {
    const double L = scenario.length, M = scenario.width;
    const auto& nodes = summary.best_deployment.nodes;
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_num(-0.05 * L) << ' '
        << svg_num(-0.05 * M) << ' ' << svg_num(1.1 * L) << ' ' << svg_num(1.1 * M)
        << "\" width=\"660\" height=\"660\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << svg_num(L) << "\" height=\"" << svg_num(M)
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << svg_num(0.01 * L) << "\"/>\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (distance(nodes[i], nodes[j]) < scenario.comm_radius)
                out << "<line x1=\"" << svg_num(nodes[i].x) << "\" y1=\"" << svg_num(M - nodes[i].y)
                    << "\" x2=\"" << svg_num(nodes[j].x) << "\" y2=\"" << svg_num(M - nodes[j].y)
                    << "\" stroke=\"#2ca02c\" stroke-width=\"" << svg_num(0.004 * L) << "\"/>\n";
    for (const auto& node : nodes)
        out << "<circle cx=\"" << svg_num(node.x) << "\" cy=\"" << svg_num(M - node.y) << "\" r=\""
            << svg_num(0.01 * L) << "\" fill=\"#d62728\"/>\n";
    out << "<text x=\"0\" y=\"" << svg_num(-0.015 * M) << "\" font-size=\"" << svg_num(0.03 * M)
        << "\">" << summary.algorithm << " largest component " << summary.best_connectivity.largest
        << "/" << nodes.size() << "</text>\n";
    out << "</svg>\n";
}

void write_convergence_svg(const ExperimentReport& report, const std::filesystem::path& path) {
    // Best trial's coverage curve per algorithm.
    const double width = 800.0, height = 500.0, margin = 60.0;
    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    out << "<rect x=\"" << margin << "\" y=\"" << margin / 2 << "\" width=\"" << width - 1.5 * margin
        << "\" height=\"" << height - 1.5 * margin
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    std::size_t color = 0;
    for (const auto& cell : report.campaign.cells) {
        const auto& curve = cell.trials[cell.best_trial].result.curve;
        if (curve.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[color % kPalette.size()]
            << "\" stroke-width=\"1.5\" points=\"";
        const double denom = curve.size() > 1 ? static_cast<double>(curve.size() - 1) : 1.0;
        for (std::size_t i = 0; i < curve.size(); ++i) {
            const double x = margin + (width - 1.5 * margin) * static_cast<double>(i) / denom;
            const double value = display_value(report, curve[i]);
            const double y = height - margin - (height - 1.5 * margin) * value;
            out << svg_num(x) << ',' << svg_num(y) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << margin + 8 << "\" y=\"" << margin + 16 * (color + 1)
            << "\" font-size=\"13\" fill=\"" << kPalette[color % kPalette.size()] << "\">"
            << cell.algorithm << "</text>\n";
        ++color;
    }
    out << "<text x=\"" << width / 2 - 40 << "\" y=\"" << height - 12
        << "\" font-size=\"14\">iteration</text>\n";
    out << "<text x=\"8\" y=\"" << height / 2 << "\" font-size=\"14\">coverage</text>\n";
    out << "</svg>\n";
}

} // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer;
    const auto [last, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), last);
}

std::vector<std::filesystem::path> emit_outputs(const ExperimentReport& report,
                                                const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + directory.string());

    std::vector<std::filesystem::path> written;
    const auto add = [&](const std::filesystem::path& p) { written.push_back(p); };

    write_stats_csv(report, directory / "stats.csv");
    add(directory / "stats.csv");
    write_raw_csv(report, directory / "raw.csv");
    add(directory / "raw.csv");
    write_curves_csv(report, directory / "curves.csv");
    add(directory / "curves.csv");
    write_report_json(report, directory / "report.json");
    add(directory / "report.json");
    {
        auto out = open_out(directory / "config.json");
        out << config_to_json(report.config);
        add(directory / "config.json");
    }
    if (is_wsn(report)) {
        write_deployment_csv(report, directory / "deployment.csv");
        add(directory / "deployment.csv");
        for (const auto& summary : report.wsn) {
            const auto dep = directory / ("deployment_" + summary.algorithm + ".svg");
            write_deployment_svg(summary, report.config.scenario, dep);
            add(dep);
            const auto con = directory / ("connectivity_" + summary.algorithm + ".svg");
            write_connectivity_svg(summary, report.config.scenario, con);
            add(con);
        }
        write_convergence_svg(report, directory / "convergence.svg");
        add(directory / "convergence.svg");
    }
    return written;
}

void print_summary(const ExperimentReport& report, std::ostream& os) {
    if (is_wsn(report)) {
        os << "algorithm      best     worst    mean     std      eta(best)\n";
        for (std::size_t i = 0; i < report.campaign.cells.size(); ++i) {
            const auto& cell = report.campaign.cells[i];
            const auto& summary = report.wsn[i];
            os << std::left << std::setw(14) << cell.algorithm << std::right << std::fixed
               << std::setprecision(2) << std::setw(7) << (1.0 - cell.stats.best) * 100.0 << "% "
               << std::setw(7) << (1.0 - cell.stats.worst) * 100.0 << "% " << std::setw(7)
               << (1.0 - cell.stats.mean) * 100.0 << "% " << std::setprecision(5) << std::setw(8)
               << cell.stats.std << ' ' << std::setprecision(2) << std::setw(7)
               << summary.best_connectivity.eta * 100.0 << "%\n";
        }
        return;
    }
    os << "algorithm      objective  best          mean          std\n";
    for (const auto& cell : report.campaign.cells) {
        os << std::left << std::setw(14) << cell.algorithm << std::setw(10) << cell.objective
           << std::right << std::scientific << std::setprecision(4) << std::setw(13)
           << cell.stats.best << ' ' << std::setw(13) << cell.stats.mean << ' ' << std::setw(13)
           << cell.stats.std << '\n';
    }
}

} // namespace ingo
