// rootfind.hpp - real-coefficient polynomial roots via the companion matrix.
//
// Small degrees only (the per-entry critical-point polynomials are degree 10
// and 8); coefficients are balanced before the eigenvalue solve because they
// can span many orders of magnitude.

#pragma once

#include "beamrange/types.hpp"

namespace beamrange {

/// Dense real polynomial, coefficients in ascending degree order.
struct RealPolynomial {
    RVector coeffs;  // coeffs(k) multiplies x^k

    /// Degree after trimming negligible leading coefficients
    /// (|c| <= 1e-14 * max|c|); -1 for the identically-zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    double operator()(double x) const;
};

/// All deg(p) complex roots (with multiplicity) of the trimmed polynomial.
/// Throws std::invalid_argument on the zero polynomial; degree 0 yields {}.
std::vector<Complex> roots(const RealPolynomial& p);

/// Real parts of the roots with |imag| <= imag_tol * (1 + |real|), sorted
/// ascending and deduplicated at 1e-9 spacing.
std::vector<double> real_roots(const RealPolynomial& p, double imag_tol = 1e-8);

}  // namespace beamrange
