// metrics.hpp - direct, full-matrix evaluation of beampattern and ISLR metrics.
//
// Spatial ISLR: beampattern power averaged over undesired angles divided by
// the average over desired angles. Range ISLR: total auto-/cross-correlation
// sidelobe energy divided by the zero-lag (mainlobe) energy of the set.
// These evaluators are the reference path; the per-entry coefficient
// machinery in coeffs.hpp is validated against them.

#pragma once

#include "beamrange/types.hpp"

namespace beamrange {

struct IslrReport {
    double spatial_islr = 0.0;  // linear
    double range_islr = 0.0;    // linear
    double objective = 0.0;     // eta * spatial + (1 - eta) * range
    double spatial_islr_db = 0.0;
    double range_islr_db = 0.0;
};

/// 10*log10 of a linear power ratio; values <= 1e-300 clamp to -3000 dB.
double to_db(double linear);

/// Uniform linear array steering vector, element k = exp(j*2*pi*(dt/lambda)*k*sin(theta)).
CVector steering_vector(double theta, int mt, double dt_over_lambda);

/// Transmit power toward theta: (1/N) * sum_n |a(theta)^H s_col_n|^2.
double beampattern(const CMatrix& s, double theta, double dt_over_lambda);

/// sum_n col^H A_u col / sum_n col^H A_d col. Throws std::runtime_error when
/// the desired-direction power is degenerate (<= 1e-15 * ||S||_F^2).
double spatial_islr(const CMatrix& s, const AngleScenario& scenario);

/// Aperiodic cross-correlation at a single lag k in [-(N-1), N-1]:
/// sum_n x_n * conj(y_{n+k}) over the overlapping range.
Complex cross_correlation(const CVector& x, const CVector& y, int k);

/// All 2N-1 lags at once; entry i holds lag k = i - (N-1). Uses a zero-padded
/// FFT for N >= 16 and direct sums below that.
CVector cross_correlation_all(const CVector& x, const CVector& y);

/// Total correlation sidelobe energy:
/// sum_{m,l} sum_k |r_{m,l}(k)|^2 - sum_m |r_{m,m}(0)|^2.
double range_isl(const CMatrix& s);

/// range_isl / sum_m |r_{m,m}(0)|^2; the denominator is Mt*N^2 for unimodular
/// sets. Throws std::runtime_error on a zero-energy matrix.
double range_islr(const CMatrix& s);

/// Full report with the eta-weighted objective.
IslrReport objective(const CMatrix& s, const AngleScenario& scenario, double eta);

/// Real value of the Hermitian form x^H A x. The imaginary residue must be
/// tiny (|imag| <= 1e-10 * |real| + 1e-14); a violation indicates a
/// non-Hermitian matrix upstream and throws std::logic_error.
double hermitian_form_real(const CMatrix& a, const CVector& x);

}  // namespace beamrange
