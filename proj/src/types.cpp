#include "beamrange/types.hpp"

#include <algorithm>
#include <cmath>

namespace beamrange {

namespace {

const double kAngleTol = 1e-12;  // radians; dedup/overlap comparisons

std::vector<double> dedup_angles(const std::vector<double>& angles) {
    std::vector<double> out;
    out.reserve(angles.size());
    for (double a : angles) {
        bool seen = false;
        for (double b : out) {
            if (std::abs(a - b) <= kAngleTol) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(a);
    }
    return out;
}

CMatrix averaged_steering_product(const std::vector<double>& angles, int mt, int n,
                                  double dt_over_lambda) {
    CMatrix acc = CMatrix::Zero(mt, mt);
    for (double theta : angles) {
        CVector a(mt);
        for (int k = 0; k < mt; ++k) {
            a(k) = std::polar(1.0, 2.0 * M_PI * dt_over_lambda * k * std::sin(theta));
        }
        acc += a * a.adjoint();
    }
    acc /= static_cast<double>(n) * static_cast<double>(angles.size());
    return acc;
}

}  // namespace

const char* to_string(ConstraintKind kind) {
    switch (kind) {
        case ConstraintKind::Energy: return "energy";
        case ConstraintKind::Par: return "par";
        case ConstraintKind::ContinuousPhase: return "continuous";
        case ConstraintKind::DiscretePhase: return "discrete";
    }
    return "unknown";
}

void AngleScenario::build_matrices(int mt, int n) {
    theta_d = dedup_angles(theta_d);
    theta_u = dedup_angles(theta_u);
    if (theta_d.empty()) throw ConfigError("scenario error: theta_d is empty");
    if (theta_u.empty()) throw ConfigError("scenario error: theta_u is empty");
    for (double d : theta_d) {
        for (double u : theta_u) {
            if (std::abs(d - u) <= kAngleTol) {
                throw ConfigError("scenario error: theta_d and theta_u overlap at " +
                                  std::to_string(rad_to_deg(d)) + " deg");
            }
        }
    }
    a_u = averaged_steering_product(theta_u, mt, n, dt_over_lambda);
    a_d = averaged_steering_product(theta_d, mt, n, dt_over_lambda);
}

RunConfig validate_config(const RunConfig& cfg) {
    RunConfig out = cfg;
    if (out.mt < 1) throw ConfigError("dimension error: mt must be >= 1");
    if (out.n < 2) throw ConfigError("dimension error: n must be >= 2");
    if (!(out.eta >= 0.0 && out.eta <= 1.0)) throw ConfigError("eta out of [0,1]");
    if (!(out.zeta > 0.0)) throw ConfigError("zeta must be > 0");
    if (out.max_sweeps < 1) throw ConfigError("max_sweeps must be >= 1");

    const double budget = static_cast<double>(out.mt) * out.n;
    switch (out.constraint.kind) {
        case ConstraintKind::Par:
            if (!(out.constraint.gamma_p >= 1.0))
                throw ConfigError("constraint error: gamma_p must be >= 1 (linear)");
            if (!(out.constraint.gamma_p < budget))
                throw ConfigError("constraint error: gamma_p must be < Mt*N");
            break;
        case ConstraintKind::DiscretePhase:
            if (out.constraint.alphabet_size < 2)
                throw ConfigError("constraint error: alphabet_size must be >= 2");
            break;
        default:
            break;
    }

    if (out.init_alphabet < 2) throw ConfigError("init_alphabet must be >= 2");
    if (out.constraint.kind == ConstraintKind::DiscretePhase &&
        out.constraint.alphabet_size % out.init_alphabet != 0) {
        out.init_alphabet = out.constraint.alphabet_size;
    }

    out.scenario.build_matrices(out.mt, out.n);
    return out;
}

void validate_waveform(const CMatrix& s) {
    if (s.rows() < 1 || s.cols() < 2) {
        throw ConfigError("dimension error: waveform must be at least 1 x 2");
    }
    if (!s.allFinite()) throw ConfigError("waveform contains non-finite entries");
}

std::vector<double> expand_angle_grid_deg(double lo_deg, double hi_deg, double step_deg) {
    if (!(step_deg > 0.0)) throw ConfigError("angle grid step must be > 0");
    if (lo_deg > hi_deg) throw ConfigError("angle grid has lo > hi");
    const int count = static_cast<int>(std::floor((hi_deg - lo_deg) / step_deg + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(lo_deg + i * step_deg);
    return out;
}

}  // namespace beamrange
