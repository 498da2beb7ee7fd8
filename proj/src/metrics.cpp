#include "beamrange/metrics.hpp"

#include <cmath>

#include "fft_internal.hpp"

namespace beamrange {

namespace {

const int kFftThreshold = 16;  // direct sums below this length

/// sum_n col_n^H A col_n over all columns, with the Hermitian residue check.
double hermitian_total_form(const CMatrix& a, const CMatrix& s) {
    const Complex total = (a * s).cwiseProduct(s.conjugate()).sum();
    if (std::abs(total.imag()) > 1e-10 * std::abs(total.real()) + 1e-14) {
        throw std::logic_error("hermitian form has a non-negligible imaginary residue");
    }
    return total.real();
}

double direct_range_isl(const CMatrix& s) {
    const int mt = static_cast<int>(s.rows());
    const int n = static_cast<int>(s.cols());
    double acc = 0.0;
    for (int m = 0; m < mt; ++m) {
        for (int l = 0; l < mt; ++l) {
            for (int k = -(n - 1); k <= n - 1; ++k) {
                if (m == l && k == 0) continue;
                acc += std::norm(cross_correlation(s.row(m).transpose(), s.row(l).transpose(), k));
            }
        }
    }
    return acc;
}

}  // namespace

double to_db(double linear) {
    if (linear <= 1e-300) return -3000.0;
    return 10.0 * std::log10(linear);
}

CVector steering_vector(double theta, int mt, double dt_over_lambda) {
    CVector a(mt);
    for (int k = 0; k < mt; ++k) {
        a(k) = std::polar(1.0, 2.0 * M_PI * dt_over_lambda * k * std::sin(theta));
    }
    return a;
}

double beampattern(const CMatrix& s, double theta, double dt_over_lambda) {
    const CVector a = steering_vector(theta, static_cast<int>(s.rows()), dt_over_lambda);
    return (a.adjoint() * s).squaredNorm() / static_cast<double>(s.cols());
}

double spatial_islr(const CMatrix& s, const AngleScenario& scenario) {
    const double undesired = hermitian_total_form(scenario.a_u, s);
    const double desired = hermitian_total_form(scenario.a_d, s);
    if (desired <= 1e-15 * s.squaredNorm()) {
        throw std::runtime_error("degenerate denominator: desired-direction power is zero");
    }
    return undesired / desired;
}

Complex cross_correlation(const CVector& x, const CVector& y, int k) {
    const int n = static_cast<int>(x.size());
    if (k <= -n || k >= n) throw std::out_of_range("correlation lag out of range");
    Complex acc = 0.0;
    const int lo = std::max(0, -k);
    const int hi = std::min(n, n - k);
    for (int i = lo; i < hi; ++i) acc += x(i) * std::conj(y(i + k));
    return acc;
}

CVector cross_correlation_all(const CVector& x, const CVector& y) {
    const int n = static_cast<int>(x.size());
    if (n < kFftThreshold) {
        CVector lags(2 * n - 1);
        for (int k = -(n - 1); k <= n - 1; ++k) lags(k + n - 1) = cross_correlation(x, y, k);
        return lags;
    }
    const int m = detail::correlation_fft_size(n);
    const CVector fx = detail::fft_padded(x, m);
    const CVector fy = detail::fft_padded(y, m);
    return detail::circular_to_lags(detail::ifft(fx.cwiseProduct(fy.conjugate())), n);
}

double range_isl(const CMatrix& s) {
    const int mt = static_cast<int>(s.rows());
    const int n = static_cast<int>(s.cols());
    if (n < kFftThreshold) return direct_range_isl(s);

    // Parseval shortcut: the total correlation energy over all pairs and lags
    // is (1/M) * sum_f (sum_m |X_m[f]|^2)^2, no inverse transforms needed.
    const int m = detail::correlation_fft_size(n);
    RVector spectral_power = RVector::Zero(m);
    double mainlobe = 0.0;
    for (int row = 0; row < mt; ++row) {
        const CVector fx = detail::fft_padded(s.row(row).transpose(), m);
        spectral_power += fx.cwiseAbs2();
        mainlobe += std::pow(s.row(row).squaredNorm(), 2);
    }
    return spectral_power.squaredNorm() / m - mainlobe;
}

double range_islr(const CMatrix& s) {
    if (s.squaredNorm() <= 0.0) throw std::runtime_error("zero-energy waveform set");
    double mainlobe = 0.0;
    for (int row = 0; row < s.rows(); ++row) mainlobe += std::pow(s.row(row).squaredNorm(), 2);
    return range_isl(s) / mainlobe;
}

IslrReport objective(const CMatrix& s, const AngleScenario& scenario, double eta) {
    IslrReport report;
    report.spatial_islr = spatial_islr(s, scenario);
    report.range_islr = range_islr(s);
    report.objective = eta * report.spatial_islr + (1.0 - eta) * report.range_islr;
    report.spatial_islr_db = to_db(report.spatial_islr);
    report.range_islr_db = to_db(report.range_islr);
    return report;
}

double hermitian_form_real(const CMatrix& a, const CVector& x) {
    const Complex value = x.dot(a * x);  // Eigen dot conjugates the left argument
    if (std::abs(value.imag()) > 1e-10 * std::abs(value.real()) + 1e-14) {
        throw std::logic_error("hermitian form has a non-negligible imaginary residue");
    }
    return value.real();
}

}  // namespace beamrange
