#include "beamrange/solvers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace beamrange {

namespace {

RVector conv(const RVector& a, const RVector& b) {
    RVector out = RVector::Zero(a.size() + b.size() - 1);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) out(i + j) += a(i) * b(j);
    }
    return out;
}

RVector padded_sum(const RVector& a, const RVector& b, double wa, double wb) {
    RVector out = RVector::Zero(std::max(a.size(), b.size()));
    out.head(a.size()) = wa * a;
    out.head(b.size()) += wb * b;
    return out;
}

struct Candidate {
    double x;  // r or phi
    double f;
};

/// Minimum with the tie rule from the header: strict improvement beyond
/// 1e-12 * (1 + |min|), incoming point wins ties, then smallest coordinate.
double pick_candidate(const std::vector<Candidate>& cands, double current, bool* found_finite) {
    double fmin = std::numeric_limits<double>::infinity();
    for (const Candidate& c : cands) {
        if (std::isfinite(c.f) && c.f < fmin) fmin = c.f;
    }
    if (!std::isfinite(fmin)) {
        *found_finite = false;
        return current;
    }
    *found_finite = true;
    const double tol = 1e-12 * (1.0 + std::abs(fmin));
    double best = std::numeric_limits<double>::infinity();
    bool current_ties = false;
    for (const Candidate& c : cands) {
        if (!std::isfinite(c.f) || c.f > fmin + tol) continue;
        if (c.x == current) current_ties = true;
        best = std::min(best, c.x);
    }
    return current_ties ? current : best;
}

double phase_of(Complex v) {
    return std::abs(v) < 1e-12 ? 0.0 : std::arg(v);
}

std::vector<double> stationary_radii(const EntryCoefficients& c, double phi0, double lo,
                                     double hi, SolveStats* stats) {
    std::vector<double> out;
    const RealPolynomial poly = build_r_polynomial(c, phi0);
    if (poly.is_zero()) return out;  // r-independent objective, boundaries suffice
    try {
        for (double r : real_roots(poly)) {
            if (r >= lo - 1e-12 && r <= hi + 1e-12) out.push_back(std::clamp(r, lo, hi));
        }
    } catch (const std::exception&) {
        // Root finding failed; fall back to a dense scan of the interval.
        if (stats) stats->grid_fallback = true;
        for (int i = 0; i <= 4096; ++i) out.push_back(lo + (hi - lo) * i / 4096.0);
    }
    return out;
}

std::vector<double> stationary_phases(const EntryCoefficients& c, double r, SolveStats* stats) {
    std::vector<double> out;
    const RealPolynomial poly = build_phi_polynomial(c, r);
    if (poly.is_zero()) return out;  // phase-independent objective
    try {
        for (double z : real_roots(poly)) out.push_back(2.0 * std::atan(z));
    } catch (const std::exception&) {
        if (stats) stats->grid_fallback = true;
        for (int i = 0; i < 4096; ++i) out.push_back(-M_PI + 2.0 * M_PI * i / 4096.0);
    }
    return out;
}

/// Global phi stage at fixed modulus: previous phase, the pi endpoint, and
/// every stationary phase of the tan-half-angle polynomial.
Candidate phi_stage(const EntryCoefficients& c, double r, double phi_prev, SolveStats* stats,
                    bool* finite) {
    std::vector<Candidate> cands;
    auto add_phi = [&](double phi) { cands.push_back({phi, c.value_polar(r, phi)}); };
    add_phi(phi_prev);
    add_phi(-M_PI);  // z = tan(phi/2) cannot represent the pi point
    for (double phi : stationary_phases(c, r, stats)) add_phi(phi);
    const double phi = pick_candidate(cands, phi_prev, finite);
    return {phi, c.value_polar(r, phi)};
}

Candidate r_stage(const EntryCoefficients& c, double phi, double r_prev, double lo, double hi,
                  SolveStats* stats, bool* finite) {
    std::vector<Candidate> cands;
    auto add_r = [&](double r) { cands.push_back({r, c.value_polar(r, phi)}); };
    add_r(r_prev);
    add_r(lo);
    add_r(hi);
    for (double r : stationary_radii(c, phi, lo, hi, stats)) add_r(r);
    const double r = pick_candidate(cands, r_prev, finite);
    return {r, c.value_polar(r, phi)};
}

PolarSolution alternation_polish(const EntryCoefficients& c, PolarSolution point, double lo,
                                 double hi, SolveStats* stats) {
    for (int round = 0; round < 20; ++round) {
        bool finite = false;
        const Candidate rc = r_stage(c, point.phi_star, point.r_star, lo, hi, stats, &finite);
        if (!finite) break;
        const Candidate pc = phi_stage(c, rc.x, point.phi_star, stats, &finite);
        if (!finite) break;
        if (pc.f >= point.f_value - 1e-14 * (1.0 + std::abs(point.f_value))) break;
        point = {rc.x, pc.x, pc.f};
    }
    return point;
}

/// Coarse scan of the feasible rectangle; only used to seed the polish loop
/// with a point in the right basin, the exact stages do the rest.
PolarSolution coarse_probe(const EntryCoefficients& c, double lo, double hi) {
    const int n_r = 24, n_phi = 48;
    PolarSolution best{lo, 0.0, std::numeric_limits<double>::infinity()};
    for (int j = 0; j < n_phi; ++j) {
        const double phi = -M_PI + 2.0 * M_PI * j / n_phi;
        const Complex phasor = std::polar(1.0, phi);
        for (int i = 0; i < n_r; ++i) {
            const double r = lo + (hi - lo) * i / (n_r - 1);
            const double f = c.value_phasor(r, phasor);
            if (std::isfinite(f) && f < best.f_value) best = {r, phi, f};
        }
    }
    return best;
}

/// Modulus-interval solver shared by the power and PAR constraints.
///
/// A single "minimize over r, then over phi" pass can park on a poor joint
/// point (most visibly when the best r at the incoming phase is an interval
/// end), so the phi stage is run from every r-critical point of the incoming
/// phase, the best joint candidate is polished by alternating the two exact
/// stages until the value stops moving, and a coarse probe of the rectangle
/// seeds a second polish. Every stage solve is global in its own variable,
/// so the objective never increases.
PolarSolution solve_bounded_modulus(const EntryCoefficients& c, Complex current, double lo,
                                    double hi, SolveStats* stats) {
    const double r0 = std::abs(current);
    const double phi0 = phase_of(current);
    const double f0 = c.value_polar(r0, phi0);

    std::vector<double> starts{r0, lo, hi};
    for (double r : stationary_radii(c, phi0, lo, hi, stats)) starts.push_back(r);

    bool have_best = false;
    PolarSolution best{r0, phi0, f0};
    for (double r : starts) {
        bool finite = false;
        const Candidate cand = phi_stage(c, r, phi0, stats, &finite);
        if (!finite || !std::isfinite(cand.f)) continue;
        if (!have_best || cand.f < best.f_value) {
            best = {r, cand.x, cand.f};
            have_best = true;
        }
    }
    if (!have_best) {
        if (stats) {
            stats->kept_current = true;
            stats->degenerate = true;
        }
        return {r0, phi0, f0};
    }

    best = alternation_polish(c, best, lo, hi, stats);
    const PolarSolution probe = coarse_probe(c, lo, hi);
    if (std::isfinite(probe.f_value)) {
        const PolarSolution polished = alternation_polish(c, probe, lo, hi, stats);
        if (polished.f_value < best.f_value) best = polished;
    }

    // Keep the incoming entry unless the improvement is above tie noise.
    if (!(std::isfinite(f0)) || best.f_value < f0 - 1e-12 * (1.0 + std::abs(f0))) {
        if (stats) stats->kept_current = false;
        return best;
    }
    if (stats) stats->kept_current = true;
    return {r0, phi0, f0};
}

}  // namespace

RealPolynomial build_r_polynomial(const EntryCoefficients& c, double phi0) {
    const Complex ph = std::polar(1.0, phi0);
    const double ahat = (c.a0 * ph).real();
    const double bhat = (c.b0 * ph).real();

    // At a weight endpoint only the active fraction's stationarity matters;
    // scaling by the inactive fraction's (possibly unset) denominator would
    // annihilate the polynomial.
    RVector p = RVector::Zero(11);
    if (c.eta > 0.0) {
        // A' B - A B' : quadratic-fraction stationarity.
        RVector ga(3);
        ga << 2.0 * (c.b1 * ahat - c.a1 * bhat),
              2.0 * (c.a3 * c.b1 - c.a1 * c.b3),
              2.0 * (c.a3 * bhat - c.b3 * ahat);
        if (c.eta >= 1.0) return {RVector(padded_sum(p, ga, 1.0, 1.0))};
        // scale by the strictly positive quartic denominator squared
        RVector dq(5);
        dq << c.d2, 0.0, c.d1, 0.0, 1.0;
        p = padded_sum(p, conv(ga, conv(dq, dq)), 1.0, c.eta);
    }
    // C' D - C D' : quartic-fraction stationarity.
    const double rho2 = c.c5 + 2.0 * (c.c0 * ph * ph).real();
    const double rho4 = (c.c1 * ph).real();
    RVector cq(3), dcq(2), dq(5), ddq(4);
    cq << c.c2, 2.0 * rho4, rho2;
    dcq << 2.0 * rho4, 2.0 * rho2;
    dq << c.d2, 0.0, c.d1, 0.0, 1.0;
    ddq << 0.0, 2.0 * c.d1, 0.0, 4.0;
    const RVector gc = padded_sum(conv(dcq, dq), conv(cq, ddq), 1.0, -1.0);
    if (c.eta <= 0.0) return {RVector(padded_sum(p, gc, 1.0, 1.0))};
    // scale by the nonnegative quadratic denominator squared
    RVector bq(3);
    bq << c.b1, 2.0 * bhat, c.b3;
    return {RVector(padded_sum(p, conv(gc, conv(bq, bq)), 1.0, 1.0 - c.eta))};
}

RealPolynomial build_phi_polynomial(const EntryCoefficients& c, double r) {
    const double r2 = r * r;
    RVector one2(3), q = RVector::Zero(9);
    one2 << 1.0, 0.0, 1.0;

    RVector pb(3), qb(3);
    pb << c.b3 * r2 + c.b1 + 2.0 * r * c.b0.real(), -4.0 * r * c.b0.imag(),
          c.b3 * r2 + c.b1 - 2.0 * r * c.b0.real();
    qb << c.b0.imag(), 2.0 * c.b0.real(), -c.b0.imag();

    if (c.eta > 0.0) {
        // Scaling by xi0 (> 0 for r > 0) keeps parity with the full formula;
        // at eta == 1 the quadratic-fraction gradient stands alone.
        const double xi0 = c.eta >= 1.0 ? 1.0 : r2 * r2 + c.d1 * r2 + c.d2;
        RVector pa(3), qa(3);
        pa << c.a3 * r2 + c.a1 + 2.0 * r * c.a0.real(), -4.0 * r * c.a0.imag(),
              c.a3 * r2 + c.a1 - 2.0 * r * c.a0.real();
        qa << c.a0.imag(), 2.0 * c.a0.real(), -c.a0.imag();
        const RVector cross = padded_sum(conv(pa, qb), conv(qa, pb), 1.0, -1.0);
        q = padded_sum(q, conv(cross, conv(one2, one2)), 1.0, c.eta * xi0);
    }
    if (c.eta < 1.0) {
        RVector qc0(5), qc1(3);
        qc0 << c.c0.imag(), 4.0 * c.c0.real(), -6.0 * c.c0.imag(), -4.0 * c.c0.real(),
               c.c0.imag();
        qc1 << c.c1.imag(), 2.0 * c.c1.real(), -c.c1.imag();
        const RVector trig = padded_sum(qc0, conv(qc1, one2), 2.0 * r, 1.0);
        if (c.eta <= 0.0) {
            // Quartic-fraction gradient alone; the (unset at eta == 0)
            // quadratic denominator must not zero it out.
            q = padded_sum(q, trig, 1.0, -1.0);
        } else {
            q = padded_sum(q, conv(trig, conv(pb, pb)), 1.0, -(1.0 - c.eta));
        }
    }
    return {RVector(2.0 * r * q)};
}

PolarSolution solve_energy(const EntryCoefficients& c, Complex current, SolveStats* stats) {
    return solve_bounded_modulus(c, current, 0.0, std::sqrt(std::max(0.0, c.gamma_e)), stats);
}

PolarSolution solve_par(const EntryCoefficients& c, Complex current, SolveStats* stats) {
    const double lo = c.gamma_l > 0.0 ? std::sqrt(c.gamma_l) : 0.0;
    const double hi = std::sqrt(std::max(0.0, std::min(c.gamma_u, c.gamma_e)));
    // When the PAR cap saturates, gamma_l == gamma_u up to a few ulps and
    // rounding can invert them. Collapse onto the upper-bound side: powers
    // must never be forced above the cap, otherwise write rounding feeds the
    // peak back through gamma_l (amplified by Mt*N/gamma_p) and the excess
    // compounds across sweeps. A real inversion means the incoming matrix
    // violates the constraint.
    if (lo > hi + 1e-9 * (1.0 + hi)) {
        throw std::runtime_error("empty PAR interval: incoming waveform is infeasible");
    }
    return solve_bounded_modulus(c, current, std::min(lo, hi), hi, stats);
}

PolarSolution solve_continuous(const EntryCoefficients& c, double phi0, SolveStats* stats) {
    std::vector<Candidate> cands;
    auto add_phi = [&](double phi) { cands.push_back({phi, c.value_polar(1.0, phi)}); };
    add_phi(phi0);
    add_phi(-M_PI);
    for (double phi : stationary_phases(c, 1.0, stats)) add_phi(phi);

    bool finite = false;
    const double phi_star = pick_candidate(cands, phi0, &finite);
    if (!finite) {
        if (stats) {
            stats->kept_current = true;
            stats->degenerate = true;
        }
        return {1.0, phi0, c.value_polar(1.0, phi0)};
    }
    if (stats) stats->kept_current = (phi_star == phi0);
    return {1.0, phi_star, c.value_polar(1.0, phi_star)};
}

PolarSolution solve_discrete(const EntryCoefficients& c, int alphabet_size, SolveStats* stats) {
    const int L = alphabet_size;
    if (L < 2) throw std::invalid_argument("alphabet size must be >= 2");

    // Common-denominator form of the unit-modulus objective: fold the range
    // numerator against the desired-power denominator so one ratio of two
    // short DFTs evaluates all L phases. At eta == 0 the spatial denominator
    // carries no weight and is replaced by the constant 1.
    const double quartic_den = 1.0 + c.d1 + c.d2;
    const double kappa = (1.0 - c.eta) / quartic_den;
    const Complex h0 = c.eta > 0.0 ? c.b0 : Complex{0.0, 0.0};
    const double h1 = c.eta > 0.0 ? c.b1 + c.b3 : 1.0;
    const double abar1 = c.a1 + c.a3;
    const double cbar2 = c.c2 + c.c5;

    std::array<Complex, 7> g{};
    g[0] = kappa * c.c0 * h0;
    g[1] = kappa * (c.c0 * h1 + c.c1 * h0);
    g[2] = kappa * (c.c0 * std::conj(h0) + c.c1 * h1 + cbar2 * h0) + c.eta * c.a0;
    g[3] = kappa * (c.c1 * std::conj(h0) + cbar2 * h1 + std::conj(c.c1) * h0) + c.eta * abar1;
    g[4] = std::conj(g[2]);
    g[5] = std::conj(g[1]);
    g[6] = std::conj(g[0]);
    std::array<Complex, 3> h{h0, Complex{h1, 0.0}, std::conj(h0)};

    // Aliasing folds for alphabets shorter than the coefficient sequences.
    std::vector<Complex> gf(std::min(L, 7), Complex{0.0, 0.0});
    std::vector<Complex> hf(std::min(L, 3), Complex{0.0, 0.0});
    for (int k = 0; k < 7; ++k) gf[k % gf.size()] += g[k];
    for (int k = 0; k < 3; ++k) hf[k % hf.size()] += h[k];

    int best_l = 0;
    double best_f = std::numeric_limits<double>::infinity();
    bool any_finite = false;
    for (int l = 0; l < L; ++l) {
        const double phi = 2.0 * M_PI * l / L;
        const Complex w = std::polar(1.0, -phi);  // DFT kernel
        Complex num{0.0, 0.0}, den{0.0, 0.0}, wk{1.0, 0.0};
        for (size_t k = 0; k < gf.size(); ++k, wk *= w) num += gf[k] * wk;
        wk = Complex{1.0, 0.0};
        for (size_t k = 0; k < hf.size(); ++k, wk *= w) den += hf[k] * wk;
        double f = (std::polar(1.0, 3.0 * phi) * num).real() /
                   (std::polar(1.0, phi) * den).real();
        if (!std::isfinite(f)) f = c.value_polar(1.0, phi);
        if (!std::isfinite(f)) continue;
        // Lowest index wins among values inside tie noise.
        if (!any_finite || f < best_f - 1e-12 * (1.0 + std::abs(best_f))) {
            best_f = f;
            best_l = l;
            any_finite = true;
        }
    }
    if (!any_finite) {
        if (stats) {
            stats->kept_current = true;
            stats->degenerate = true;
        }
        return {1.0, 0.0, std::numeric_limits<double>::quiet_NaN()};
    }

    double phi_star = std::remainder(2.0 * M_PI * best_l / L, 2.0 * M_PI);
    if (phi_star >= M_PI) phi_star -= 2.0 * M_PI;
    return {1.0, phi_star, best_f};
}

PolarSolution grid_oracle(const EntryCoefficients& c, const ConstraintSpec& constraint,
                          int n_r, int n_phi) {
    if (n_r < 3 || n_phi < 3) throw std::invalid_argument("grid sizes must be >= 3");

    if (constraint.kind == ConstraintKind::DiscretePhase) {
        const int L = constraint.alphabet_size;
        PolarSolution best{1.0, 0.0, std::numeric_limits<double>::infinity()};
        for (int l = 0; l < L; ++l) {
            const double phi = 2.0 * M_PI * l / L;
            const double f = c.value_polar(1.0, phi);
            if (std::isfinite(f) && f < best.f_value) {
                best = {1.0, std::remainder(phi, 2.0 * M_PI), f};
            }
        }
        if (best.phi_star >= M_PI) best.phi_star -= 2.0 * M_PI;
        return best;
    }

    double r_lo = 0.0, r_hi = 0.0;
    switch (constraint.kind) {
        case ConstraintKind::Energy:
            r_hi = std::sqrt(std::max(0.0, c.gamma_e));
            break;
        case ConstraintKind::Par:
            r_lo = c.gamma_l > 0.0 ? std::sqrt(c.gamma_l) : 0.0;
            r_hi = std::sqrt(std::max(0.0, std::min(c.gamma_u, c.gamma_e)));
            break;
        case ConstraintKind::ContinuousPhase:
            r_lo = r_hi = 1.0;
            break;
        default:
            break;
    }

    std::vector<Complex> phasors(n_phi);
    std::vector<double> phases(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        phases[j] = -M_PI + 2.0 * M_PI * j / n_phi;
        phasors[j] = std::polar(1.0, phases[j]);
    }

    const int radii = (constraint.kind == ConstraintKind::ContinuousPhase) ? 1 : n_r;
    PolarSolution best{r_lo, -M_PI, std::numeric_limits<double>::infinity()};
    for (int i = 0; i < radii; ++i) {
        const double r = radii == 1 ? r_lo
                                    : (i == radii - 1 ? r_hi  // boundary hit exactly
                                                      : r_lo + (r_hi - r_lo) * i / (radii - 1));
        for (int j = 0; j < n_phi; ++j) {
            const double f = c.value_phasor(r, phasors[j]);
            if (std::isfinite(f) && f < best.f_value) best = {r, phases[j], f};
        }
    }
    return best;
}

}  // namespace beamrange
