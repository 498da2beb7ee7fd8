// solvers.hpp - exact single-variable minimizers for each constraint class.
//
// Every update works in polar form v = r * exp(j*phi). For the power and PAR
// constraints one alternation is performed: minimize over r at the entry's
// current phase (candidates: interval boundaries plus the real roots of a
// degree-10 polynomial), then over phi at the chosen r (candidates: phi = pi
// plus 2*atan of the real roots of a degree-8 polynomial in z = tan(phi/2)).
// Unit-modulus constraints skip the r stage; the discrete alphabet is solved
// by a DFT evaluation of the objective over the L phases.
//
// The incoming point is always a candidate, so no update can increase the
// objective. Tie handling: a candidate must beat the running minimum by more
// than 1e-12 * (1 + |min|); among tied minimizers the incoming point wins
// (entries do not drift on flat objectives), otherwise the smallest r / phi.
// The discrete solver instead keeps the lowest alphabet index on exact ties.

#pragma once

#include "beamrange/coeffs.hpp"
#include "beamrange/rootfind.hpp"

namespace beamrange {

struct PolarSolution {
    double r_star = 0.0;    // >= 0
    double phi_star = 0.0;  // in [-pi, pi)
    double f_value = 0.0;   // objective at the solution
};

struct SolveStats {
    bool kept_current = false;  // entry should stay bitwise unchanged
    bool grid_fallback = false; // root finding failed, dense grid used
    bool degenerate = false;    // no finite candidate value, entry kept
};

/// Numerator polynomial of d f / d r at fixed phase phi0 (ascending, degree
/// <= 10). Real roots in the feasible interval are the interior stationary
/// points; the identically-zero polynomial signals an r-independent
/// objective.
RealPolynomial build_r_polynomial(const EntryCoefficients& c, double phi0);

/// Numerator polynomial of d f / d phi at fixed modulus, in z = tan(phi/2)
/// (ascending, degree <= 8). phi = pi is not representable and is always
/// appended as an explicit candidate by the solvers.
RealPolynomial build_phi_polynomial(const EntryCoefficients& c, double r_fixed);

/// Power budget: r in [0, sqrt(gamma_e)].
PolarSolution solve_energy(const EntryCoefficients& c, Complex current,
                           SolveStats* stats = nullptr);

/// PAR box: r in [max(0, sqrt(gamma_l)), min(sqrt(gamma_u), sqrt(gamma_e))].
/// Throws std::runtime_error when the interval is empty (infeasible input).
PolarSolution solve_par(const EntryCoefficients& c, Complex current,
                        SolveStats* stats = nullptr);

/// Unit modulus, free phase. phi0 is the entry's current phase.
PolarSolution solve_continuous(const EntryCoefficients& c, double phi0,
                               SolveStats* stats = nullptr);

/// Unit modulus, phase limited to the L-point alphabet {2*pi*l/L}.
PolarSolution solve_discrete(const EntryCoefficients& c, int alphabet_size,
                             SolveStats* stats = nullptr);

/// Exhaustive minimum over a feasible (r, phi) grid; the test oracle and the
/// numeric fallback. Boundary radii are hit exactly and the phi grid starts
/// at -pi; ties keep the first grid point in (r, phi) scan order. For the
/// discrete constraint this enumerates the alphabet.
PolarSolution grid_oracle(const EntryCoefficients& c, const ConstraintSpec& constraint,
                          int n_r, int n_phi);

}  // namespace beamrange
