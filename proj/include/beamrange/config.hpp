// config.hpp - batch experiment description parsed from a text config.
//
// Line-oriented key = value format with optional [section] headers and '#'
// comments. Angles are given in degrees as [lo, hi, step] triples; a list
// value for eta switches the experiment into sweep mode.

#pragma once

#include "beamrange/types.hpp"

namespace beamrange {

struct ExperimentSpec {
    RunConfig config;          // eta holds etas.front() for single runs
    std::vector<double> etas;  // more than one entry means a Pareto sweep
    int trials = 1;
    std::string output_dir = "out";

    bool sweep() const { return etas.size() > 1; }
};

/// Parses and fully validates a config file. Throws ConfigError with
/// "<path>:<line>: ..." context on malformed input, unknown keys, missing
/// required keys, or any violated model invariant.
///
/// Keys: mt, n, constraint (energy|par|continuous|discrete), gamma_p_db,
/// alphabet_size, eta (scalar or list), zeta, max_sweeps, seed, trials,
/// theta_d, theta_u ([lo_deg, hi_deg, step_deg], repeatable), output_dir,
/// and optionally init_alphabet and dt_over_lambda.
ExperimentSpec parse_config(const std::string& path);

}  // namespace beamrange
