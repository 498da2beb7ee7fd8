// coeffs.hpp - closed-form per-entry decomposition of the objective.
//
// Freezing every entry of S except s(t,d) = v turns the objective into a
// weighted sum of two single-variable fractions:
//
//   spatial part:  (2 Re{a0 v} + a1 + a3 |v|^2) / (2 Re{b0 v} + b1 + b3 |v|^2)
//   range part:    (2 Re{c0 v^2} + 2 Re{c1 v} + c2 + c5 |v|^2)
//                  / (|v|^4 + d1 |v|^2 + d2)
//
// The a/b sets come from the averaged steering products; the c/d sets from
// correlation sums of the entry-zeroed rows. The decomposition is exact:
// value(v) here equals the direct metrics objective on S with s(t,d) = v,
// which is what the test suite asserts.

#pragma once

#include "beamrange/types.hpp"

namespace beamrange {

struct SpatialCoeffs {
    Complex a0{0.0, 0.0};  // undesired-power linear term (conjugate pair implied)
    double a1 = 0.0;
    double a3 = 0.0;
    Complex b0{0.0, 0.0};  // desired-power linear term
    double b1 = 0.0;
    double b3 = 0.0;
};

struct RangeCoeffs {
    Complex c0{0.0, 0.0};  // v^2 term of the sidelobe energy
    Complex c1{0.0, 0.0};  // v term
    double c2 = 0.0;       // constant term (sidelobe energy with the entry zeroed)
    double c5 = 0.0;       // |v|^2 term
    double d1 = 0.0;       // mainlobe energy: |v|^4 + d1 |v|^2 + d2
    double d2 = 0.0;
};

struct ConstraintBounds {
    double gamma_e = 0.0;  // energy headroom for |v|^2
    double gamma_l = 0.0;  // PAR lower bound for |v|^2 (may be negative)
    double gamma_u = 0.0;  // PAR upper bound for |v|^2
};

/// Everything a single-variable solver needs for entry (t, d), zero-based.
struct EntryCoefficients {
    Complex a0{0.0, 0.0};
    double a1 = 0.0, a3 = 0.0;
    Complex b0{0.0, 0.0};
    double b1 = 0.0, b3 = 0.0;
    Complex c0{0.0, 0.0}, c1{0.0, 0.0};
    double c2 = 0.0, c5 = 0.0;
    double d1 = 0.0, d2 = 0.0;
    double gamma_e = 0.0, gamma_l = 0.0, gamma_u = 0.0;
    int t = 0, d = 0;
    double eta = 0.5;

    /// Objective value with the entry set to v. The spatial (range) fraction
    /// is skipped entirely at eta == 0 (eta == 1), so a vanishing unused
    /// denominator cannot poison the result.
    double value(Complex v) const;
    double value_polar(double r, double phi) const;
    /// Same with a precomputed unit phasor exp(j*phi); hot path for grids.
    double value_phasor(double r, Complex phasor) const;
};

SpatialCoeffs spatial_coeffs(const CMatrix& s, int t, int d, const AngleScenario& scenario);

RangeCoeffs range_coeffs(const CMatrix& s, int t, int d);

ConstraintBounds constraint_bounds(const CMatrix& s, int t, int d, const ConstraintSpec& constraint);

/// Bundles the three extractions. The spatial set is skipped when eta == 0
/// and the range set when eta == 1 (their fractions carry zero weight).
EntryCoefficients entry_coefficients(const CMatrix& s, int t, int d,
                                     const AngleScenario& scenario,
                                     const ConstraintSpec& constraint, double eta);

}  // namespace beamrange
