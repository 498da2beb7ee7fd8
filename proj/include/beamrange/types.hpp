// types.hpp - core domain types shared by the whole library.
//
// A waveform set is a dense complex Mt x N matrix: rows are transmit
// antennas, columns are fast-time samples. Everything downstream (metrics,
// per-entry coefficient extraction, solvers, the descent engine) works on
// plain Eigen matrices; these structs carry the configuration around them.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace beamrange {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Configuration or validation problem (bad dimensions, malformed scenario,
/// unparseable config file). Maps to exit code 3 at the CLI boundary.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ConstraintKind {
    Energy,           // total transmit power budget
    Par,              // power budget plus peak-to-average ratio cap
    ContinuousPhase,  // unit modulus, free phase
    DiscretePhase,    // unit modulus, L-point phase alphabet
};

/// Which feasible set each per-entry update is solved over.
struct ConstraintSpec {
    ConstraintKind kind = ConstraintKind::ContinuousPhase;
    double gamma_p = 1.0;    // PAR cap, linear scale (Par only), 1 <= gamma_p < Mt*N
    int alphabet_size = 8;   // L (DiscretePhase only), >= 2
};

const char* to_string(ConstraintKind kind);

/// Desired/undesired angle sets with their averaged steering outer products.
///
/// a_u and a_d are Mt x Mt Hermitian PSD matrices:
///   a_d = (1/(N*M_d)) * sum_r a(theta_d_r) a(theta_d_r)^H,  a_u analogous.
/// They are built by build_matrices() in listed angle order, so identical
/// angle lists give bitwise-identical matrices.
struct AngleScenario {
    std::vector<double> theta_d;  // desired angles, radians
    std::vector<double> theta_u;  // undesired angles, radians
    double dt_over_lambda = 0.5;  // antenna spacing over wavelength
    CMatrix a_u;
    CMatrix a_d;

    bool built() const { return a_u.size() > 0 && a_d.size() > 0; }

    /// Populates a_u/a_d for the given dimensions. Throws ConfigError on an
    /// empty or overlapping angle set.
    void build_matrices(int mt, int n);
};

/// Full description of one optimization run.
struct RunConfig {
    int mt = 0;                  // transmit antennas, >= 1
    int n = 0;                   // sequence length, >= 2
    AngleScenario scenario;
    ConstraintSpec constraint;
    double eta = 0.5;            // trade-off weight in [0, 1]
    double zeta = 1e-6;          // per-sweep stopping threshold, > 0
    int max_sweeps = 1000;
    std::uint64_t seed = 1;
    int init_alphabet = 8;       // alphabet size of the random PSK initializer
};

/// Checks every invariant, deduplicates the angle lists, builds the averaged
/// steering matrices, and returns the normalized config. For the discrete
/// constraint the initializer alphabet is snapped to the design alphabet
/// whenever the two are incompatible (init phases must be a subset).
RunConfig validate_config(const RunConfig& cfg);

/// Mt >= 1, N >= 2 and all entries finite, else ConfigError.
void validate_waveform(const CMatrix& s);

// Degree/radian helpers; angles enter in degrees at the CLI only.
inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

/// Expands an inclusive [lo, hi] degree range with the given step into a grid
/// (both endpoints included when (hi-lo) is an integer multiple of step).
std::vector<double> expand_angle_grid_deg(double lo_deg, double hi_deg, double step_deg);

}  // namespace beamrange
