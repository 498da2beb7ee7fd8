// support.hpp - shared test fixtures: seeded random inputs and brute-force
// oracles kept independent of the library's computation paths.

#pragma once

#include <complex>
#include <random>

#include "beamrange/types.hpp"

namespace test_support {

using beamrange::CMatrix;
using beamrange::Complex;
using beamrange::CVector;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CMatrix random_gaussian(int mt, int n, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, scale);
    CMatrix s(mt, n);
    for (int m = 0; m < mt; ++m) {
        for (int j = 0; j < n; ++j) s(m, j) = Complex{dist(gen), dist(gen)};
    }
    return s;
}

inline CMatrix random_unimodular(int mt, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-M_PI, M_PI);
    CMatrix s(mt, n);
    for (int m = 0; m < mt; ++m) {
        for (int j = 0; j < n; ++j) s(m, j) = std::polar(1.0, dist(gen));
    }
    return s;
}

/// Random matrix scaled into the energy budget and clipped to the PAR cap.
inline CMatrix random_par_feasible(int mt, int n, double gamma_p, std::uint64_t seed) {
    CMatrix s = random_gaussian(mt, n, seed);
    const double budget = static_cast<double>(mt) * n;
    s *= std::sqrt(budget / s.squaredNorm()) * 0.9;
    // Clip peaks until the PAR inequality holds.
    for (int pass = 0; pass < 64; ++pass) {
        const double cap = gamma_p * s.squaredNorm() / budget;
        bool clipped = false;
        for (int m = 0; m < mt; ++m) {
            for (int j = 0; j < n; ++j) {
                if (std::norm(s(m, j)) > cap) {
                    s(m, j) *= std::sqrt(cap / std::norm(s(m, j))) * 0.999;
                    clipped = true;
                }
            }
        }
        if (!clipped) break;
    }
    return s;
}

inline beamrange::AngleScenario test_scenario(int mt, int n) {
    beamrange::AngleScenario scenario;
    for (double deg = -55.0; deg <= -35.0; deg += 5.0) {
        scenario.theta_d.push_back(beamrange::deg_to_rad(deg));
    }
    for (double deg = -90.0; deg <= -60.0; deg += 5.0) {
        scenario.theta_u.push_back(beamrange::deg_to_rad(deg));
    }
    for (double deg = -30.0; deg <= 90.0; deg += 5.0) {
        scenario.theta_u.push_back(beamrange::deg_to_rad(deg));
    }
    scenario.build_matrices(mt, n);
    return scenario;
}

/// O(N) single-lag correlation written independently of the library path.
inline Complex direct_correlation(const CVector& x, const CVector& y, int k) {
    const int n = static_cast<int>(x.size());
    Complex acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const int j = i + k;
        if (j >= 0 && j < n) acc += x(i) * std::conj(y(j));
    }
    return acc;
}

/// O(Mt^2 N^2) sidelobe energy oracle.
inline double direct_range_isl(const CMatrix& s) {
    const int mt = static_cast<int>(s.rows());
    const int n = static_cast<int>(s.cols());
    double acc = 0.0;
    for (int m = 0; m < mt; ++m) {
        for (int l = 0; l < mt; ++l) {
            for (int k = -(n - 1); k <= n - 1; ++k) {
                if (m == l && k == 0) continue;
                acc += std::norm(
                    direct_correlation(s.row(m).transpose(), s.row(l).transpose(), k));
            }
        }
    }
    return acc;
}

inline double direct_range_islr(const CMatrix& s) {
    double mainlobe = 0.0;
    for (int m = 0; m < s.rows(); ++m) mainlobe += std::pow(s.row(m).squaredNorm(), 2);
    return direct_range_isl(s) / mainlobe;
}

/// Beampattern by explicit double loop over columns and elements.
inline double direct_beampattern(const CMatrix& s, double theta, double dt_over_lambda) {
    const int mt = static_cast<int>(s.rows());
    const int n = static_cast<int>(s.cols());
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        Complex dot = 0.0;
        for (int m = 0; m < mt; ++m) {
            const Complex a = std::polar(1.0, 2.0 * M_PI * dt_over_lambda * m * std::sin(theta));
            dot += std::conj(a) * s(m, j);
        }
        acc += std::norm(dot);
    }
    return acc / n;
}

}  // namespace test_support
