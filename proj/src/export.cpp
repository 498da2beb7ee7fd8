#include "beamrange/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "beamrange/metrics.hpp"
#include "beamrange/version.hpp"

namespace fs = std::filesystem;

namespace beamrange {

namespace {

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

/// Writes content to path via a temp file and an atomic rename.
void write_file(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) {
            out.close();
            fs::remove(tmp);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

nlohmann::json config_echo(const RunConfig& cfg) {
    nlohmann::json j;
    j["mt"] = cfg.mt;
    j["n"] = cfg.n;
    j["constraint"] = to_string(cfg.constraint.kind);
    if (cfg.constraint.kind == ConstraintKind::Par) {
        j["gamma_p_db"] = 10.0 * std::log10(cfg.constraint.gamma_p);
    }
    if (cfg.constraint.kind == ConstraintKind::DiscretePhase) {
        j["alphabet_size"] = cfg.constraint.alphabet_size;
    }
    j["eta"] = cfg.eta;
    j["zeta"] = cfg.zeta;
    j["max_sweeps"] = cfg.max_sweeps;
    j["seed"] = cfg.seed;
    j["init_alphabet"] = cfg.init_alphabet;
    j["dt_over_lambda"] = cfg.scenario.dt_over_lambda;
    auto degrees = [](const std::vector<double>& radians) {
        std::vector<double> out;
        out.reserve(radians.size());
        for (double rad : radians) out.push_back(rad_to_deg(rad));
        return out;
    };
    j["theta_d_deg"] = degrees(cfg.scenario.theta_d);
    j["theta_u_deg"] = degrees(cfg.scenario.theta_u);
    return j;
}

}  // namespace

void export_run(const RunRecord& record, const RunConfig& cfg, const std::string& output_dir) {
    fs::create_directories(output_dir);
    const fs::path dir(output_dir);
    const CMatrix& s = record.waveform;
    const int mt = static_cast<int>(s.rows());
    const int n = static_cast<int>(s.cols());

    {
        std::ostringstream out;
        out << "m,n,re,im\n";
        for (int m = 0; m < mt; ++m) {
            for (int j = 0; j < n; ++j) {
                out << m + 1 << ',' << j + 1 << ',' << fmt(s(m, j).real()) << ','
                    << fmt(s(m, j).imag()) << '\n';
            }
        }
        write_file(dir / "waveform.csv", out.str());
    }
    {
        std::ostringstream out;
        out << "sweep,f_o,spatial_islr_db,range_islr_db\n";
        for (const auto& row : record.history) {
            out << row.sweep << ',' << fmt(row.f_o) << ',' << fmt(row.spatial_islr_db) << ','
                << fmt(row.range_islr_db) << '\n';
        }
        write_file(dir / "convergence.csv", out.str());
    }
    {
        std::ostringstream out;
        out << "theta_deg,P_linear,P_db\n";
        for (int i = 0; i <= 360; ++i) {
            const double deg = -90.0 + 0.5 * i;
            const double p = beampattern(s, deg_to_rad(deg), cfg.scenario.dt_over_lambda);
            out << fmt(deg) << ',' << fmt(p) << ',' << fmt(to_db(p)) << '\n';
        }
        write_file(dir / "beampattern.csv", out.str());
    }
    {
        std::ostringstream out;
        out << "m,l,k,abs_r\n";
        for (int m = 0; m < mt; ++m) {
            for (int l = 0; l < mt; ++l) {
                const CVector corr =
                    cross_correlation_all(s.row(m).transpose(), s.row(l).transpose());
                for (int k = -(n - 1); k <= n - 1; ++k) {
                    out << m + 1 << ',' << l + 1 << ',' << k << ','
                        << fmt(std::abs(corr(k + n - 1))) << '\n';
                }
            }
        }
        write_file(dir / "correlation.csv", out.str());
    }
    write_metrics_json(record.final_report, cfg, to_string(record.stop_reason),
                       record.sweeps_used, (dir / "metrics.json").string());
}

void write_pareto_csv(const std::vector<ParetoPoint>& points, const std::string& path) {
    std::ostringstream out;
    out << "eta,spatial_islr_db,range_islr_db\n";
    for (const ParetoPoint& point : points) {
        if (point.failed) continue;
        out << fmt(point.eta) << ',' << fmt(point.spatial_islr_db) << ','
            << fmt(point.range_islr_db) << '\n';
    }
    write_file(path, out.str());
}

void write_metrics_json(const IslrReport& report, const RunConfig& cfg,
                        const std::string& stop_reason, int sweeps_used,
                        const std::string& path) {
    nlohmann::json j;
    j["spatial_islr"] = report.spatial_islr;
    j["range_islr"] = report.range_islr;
    j["objective"] = report.objective;
    j["spatial_islr_db"] = report.spatial_islr_db;
    j["range_islr_db"] = report.range_islr_db;
    j["stop_reason"] = stop_reason;
    j["sweeps"] = sweeps_used;
    j["config"] = config_echo(cfg);
    j["version"] = kVersion;
    write_file(path, j.dump(2) + "\n");
}

CMatrix read_waveform_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open waveform file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("m,n,re,im", 0) != 0) {
        throw ConfigError(path + ": expected header m,n,re,im");
    }
    struct Entry {
        int m, n;
        Complex value;
    };
    std::vector<Entry> entries;
    int max_m = 0, max_n = 0, line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        int m = 0, n = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &m, &n, &re, &im) != 4 || m < 1 || n < 1) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": malformed row");
        }
        entries.push_back({m, n, Complex{re, im}});
        max_m = std::max(max_m, m);
        max_n = std::max(max_n, n);
    }
    if (entries.size() != static_cast<size_t>(max_m) * max_n) {
        throw ConfigError(path + ": incomplete waveform table");
    }
    CMatrix s = CMatrix::Zero(max_m, max_n);  // duplicates cannot leave garbage cells
    for (const Entry& e : entries) s(e.m - 1, e.n - 1) = e.value;
    return s;
}

}  // namespace beamrange
