// beamrange - batch front-end for the waveform design library.
//
//   beamrange run <config>                 single descent, full export bundle
//   beamrange pareto <config>              eta sweep, pareto.csv + per-eta bundles
//   beamrange metrics <waveform.csv> <config>   re-evaluate an external waveform
//
// Exit codes: 0 success, 2 usage, 3 config error, 4 runtime error.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "beamrange/config.hpp"
#include "beamrange/engine.hpp"
#include "beamrange/export.hpp"
#include "beamrange/version.hpp"

namespace fs = std::filesystem;
using namespace beamrange;

namespace {

void print_usage() {
    std::cerr << "beamrange " << kVersion << "\n"
              << "usage: beamrange run <config>\n"
              << "       beamrange pareto <config>\n"
              << "       beamrange metrics <waveform.csv> <config>\n";
}

std::string eta_dir_name(double eta) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "eta_%g", eta);
    return buffer;
}

int cmd_run(const std::string& config_path) {
    const ExperimentSpec spec = parse_config(config_path);
    if (spec.sweep()) {
        throw ConfigError(config_path + ": eta is a list; use the pareto subcommand");
    }
    const RunRecord record = run(spec.config);
    export_run(record, spec.config, spec.output_dir);
    std::cout << "run finished: sweeps=" << record.sweeps_used << " stop="
              << to_string(record.stop_reason)
              << " f_o=" << record.final_report.objective
              << " spatial=" << record.final_report.spatial_islr_db << " dB"
              << " range=" << record.final_report.range_islr_db << " dB\n"
              << "outputs in " << spec.output_dir << "\n";
    return 0;
}

int cmd_pareto(const std::string& config_path) {
    const ExperimentSpec spec = parse_config(config_path);
    const std::vector<ParetoPoint> points = pareto_sweep(spec.config, spec.etas, spec.trials);
    fs::create_directories(spec.output_dir);
    write_pareto_csv(points, (fs::path(spec.output_dir) / "pareto.csv").string());

    int failures = 0;
    for (const ParetoPoint& point : points) {
        if (point.failed) {
            ++failures;
            std::cerr << "warning: eta=" << point.eta << " failed: " << point.error << "\n";
            continue;
        }
        RunConfig cfg = spec.config;
        cfg.eta = point.eta;
        const std::string dir =
            (fs::path(spec.output_dir) / eta_dir_name(point.eta)).string();
        export_run(point.record, cfg, dir);
        std::cout << "eta=" << point.eta << " spatial=" << point.spatial_islr_db
                  << " dB range=" << point.range_islr_db << " dB\n";
    }
    std::cout << "pareto sweep finished, outputs in " << spec.output_dir << "\n";
    if (failures == static_cast<int>(points.size())) {
        throw std::runtime_error("every pareto point failed");
    }
    return 0;
}

int cmd_metrics(const std::string& waveform_path, const std::string& config_path) {
    const ExperimentSpec spec = parse_config(config_path);
    const CMatrix s = read_waveform_csv(waveform_path);
    if (s.rows() != spec.config.mt || s.cols() != spec.config.n) {
        throw ConfigError("waveform dimensions " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + " do not match the config");
    }
    const IslrReport report = objective(s, spec.config.scenario, spec.config.eta);
    fs::create_directories(spec.output_dir);
    write_metrics_json(report, spec.config, "n/a", 0,
                       (fs::path(spec.output_dir) / "metrics.json").string());
    std::cout << "spatial=" << report.spatial_islr_db << " dB range=" << report.range_islr_db
              << " dB f_o=" << report.objective << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (args.size() == 2 && args[0] == "run") return cmd_run(args[1]);
        if (args.size() == 2 && args[0] == "pareto") return cmd_pareto(args[1]);
        if (args.size() == 3 && args[0] == "metrics") return cmd_metrics(args[1], args[2]);
        print_usage();
        return 2;
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    }
}
