#include "beamrange/rootfind.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace beamrange {

int RealPolynomial::degree() const {
    const double scale = coeffs.size() ? coeffs.cwiseAbs().maxCoeff() : 0.0;
    if (scale <= 0.0) return -1;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        if (std::abs(coeffs(k)) > 1e-14 * scale) return k;
    }
    return -1;
}

double RealPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * x + coeffs(k);
    return acc;
}

std::vector<Complex> roots(const RealPolynomial& p) {
    const int deg = p.degree();
    if (deg < 0) throw std::invalid_argument("roots of the zero polynomial are undefined");
    if (deg == 0) return {};

    RVector c = p.coeffs.head(deg + 1) / p.coeffs.cwiseAbs().maxCoeff();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    companion.diagonal(-1).setOnes();
    companion.col(deg - 1) = -c.head(deg) / c(deg);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("companion eigenvalue iteration failed to converge");
    }
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

std::vector<double> real_roots(const RealPolynomial& p, double imag_tol) {
    std::vector<double> out;
    for (const Complex& z : roots(p)) {
        if (std::abs(z.imag()) <= imag_tol * (1.0 + std::abs(z.real()))) {
            out.push_back(z.real());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
              out.end());
    return out;
}

}  // namespace beamrange
