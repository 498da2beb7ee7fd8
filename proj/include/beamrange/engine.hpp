// engine.hpp - the cyclic coordinate-descent driver.
//
// One sweep visits every entry (row-major), extracts its single-variable
// coefficients, solves the constrained subproblem exactly and writes the
// minimizer back. The objective is re-evaluated through the direct metrics
// path after each sweep; the loop stops when the per-sweep decrease falls to
// the threshold, the sweep cap is hit, or a full sweep leaves every entry
// untouched.

#pragma once

#include <optional>

#include "beamrange/metrics.hpp"
#include "beamrange/types.hpp"

namespace beamrange {

enum class StopReason { Threshold, MaxSweeps, Stall };

const char* to_string(StopReason reason);

struct RunRecord {
    struct SweepStats {
        int sweep;  // 1-based
        double f_o;
        double spatial_islr_db;
        double range_islr_db;
    };
    std::vector<SweepStats> history;  // one entry per completed sweep
    CMatrix waveform;
    int sweeps_used = 0;
    StopReason stop_reason = StopReason::MaxSweeps;
    IslrReport final_report;
    struct Diagnostics {
        long grid_fallbacks = 0;    // dense-grid rescues of the root finder
        long degenerate_keeps = 0;  // entries kept because no candidate was finite
        double wall_seconds = 0.0;
    } diagnostics;
};

struct ParetoPoint {
    double eta = 0.0;
    double spatial_islr_db = 0.0;
    double range_islr_db = 0.0;
    RunRecord record;
    bool failed = false;
    std::string error;
};

/// Random PSK matrix: every entry exp(j*2*pi*l/l0) with l drawn from
/// {0..l0-1}. Generator: std::mt19937_64 seeded with `seed`, one draw per
/// entry in row-major order, mapped by modulo - bit-reproducible on every
/// platform. Feasible for all constraint classes.
CMatrix init_waveform(int mt, int n, int l0, std::uint64_t seed);

/// Full descent from s0 (must be feasible for cfg.constraint) or, when s0 is
/// absent, from the seeded initializer. Throws std::runtime_error on an
/// infeasible start and propagates degenerate-scenario errors.
RunRecord run(const RunConfig& cfg, const std::optional<CMatrix>& s0 = std::nullopt);

/// One point per eta: `trials` runs with seeds base+0..base+trials-1, keeping
/// the run with the lowest final objective. Points come back sorted by eta;
/// failed points are marked and do not abort the sweep. Independent runs
/// execute concurrently.
std::vector<ParetoPoint> pareto_sweep(const RunConfig& base, std::vector<double> etas,
                                      int trials);

}  // namespace beamrange
