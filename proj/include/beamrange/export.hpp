// export.hpp - CSV/JSON emission of run results for external plotting.
//
// All files are written with 17 significant digits so a re-parse reproduces
// the in-memory values, and go through a temp-file + rename so a failed
// write never leaves a partial file behind.

#pragma once

#include "beamrange/engine.hpp"
#include "beamrange/types.hpp"

namespace beamrange {

/// Writes waveform.csv, convergence.csv, beampattern.csv (0.5 deg grid over
/// [-90, 90]), correlation.csv (all pairs and lags) and metrics.json into
/// output_dir, creating it if needed.
void export_run(const RunRecord& record, const RunConfig& cfg, const std::string& output_dir);

/// pareto.csv: eta, spatial_islr_db, range_islr_db (failed points skipped).
void write_pareto_csv(const std::vector<ParetoPoint>& points, const std::string& path);

/// Standalone metrics.json for the re-evaluation subcommand.
void write_metrics_json(const IslrReport& report, const RunConfig& cfg,
                        const std::string& stop_reason, int sweeps_used,
                        const std::string& path);

/// Reads a waveform.csv written by export_run (header m,n,re,im, 1-based
/// indices). Throws ConfigError on malformed content.
CMatrix read_waveform_csv(const std::string& path);

}  // namespace beamrange
