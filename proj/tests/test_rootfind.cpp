#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "beamrange/rootfind.hpp"

using namespace beamrange;

namespace {

RealPolynomial from_coeffs(std::initializer_list<double> ascending) {
    RealPolynomial p;
    p.coeffs = RVector::Zero(static_cast<int>(ascending.size()));
    int i = 0;
    for (double c : ascending) p.coeffs(i++) = c;
    return p;
}

RealPolynomial from_roots(const std::vector<double>& rs) {
    RVector c = RVector::Zero(static_cast<int>(rs.size()) + 1);
    c(0) = 1.0;
    int deg = 0;
    for (double root : rs) {
        // multiply by (x - root)
        for (int k = deg + 1; k > 0; --k) c(k) = (k > 0 ? c(k - 1) : 0.0) - root * c(k);
        c(0) *= -root;
        ++deg;
    }
    return {c};
}

}  // namespace

TEST_CASE("factored quadratics") {
    const auto rs = real_roots(from_coeffs({2.0, -3.0, 1.0}));  // x^2 - 3x + 2
    REQUIRE(rs.size() == 2);
    CHECK(rs[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rs[1] == doctest::Approx(2.0).epsilon(1e-10));

    const auto imag = roots(from_coeffs({1.0, 0.0, 1.0}));  // x^2 + 1
    REQUIRE(imag.size() == 2);
    CHECK(real_roots(from_coeffs({1.0, 0.0, 1.0})).empty());
    for (const Complex& z : imag) {
        CHECK(std::abs(z.real()) < 1e-10);
        CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-10);
    }
}

TEST_CASE("degree-10 construct-then-solve recovery") {
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> wanted(10);
        for (double& r : wanted) r = dist(gen);
        std::sort(wanted.begin(), wanted.end());
        // keep roots separated so multiplicity does not blur the check
        bool separated = true;
        for (size_t i = 1; i < wanted.size(); ++i) {
            if (wanted[i] - wanted[i - 1] < 1e-3) separated = false;
        }
        if (!separated) continue;

        const auto got = real_roots(from_roots(wanted), 1e-6);
        REQUIRE(got.size() == wanted.size());
        for (size_t i = 0; i < wanted.size(); ++i) {
            CHECK(std::abs(got[i] - wanted[i]) < 1e-6);
        }
    }
}

TEST_CASE("root residuals satisfy the evaluation bound") {
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        RealPolynomial p;
        p.coeffs = RVector::NullaryExpr(11, [&](Eigen::Index) { return dist(gen); });
        for (const Complex& z : roots(p)) {
            Complex value = 0.0;
            double scale = 0.0;
            for (int k = p.degree(); k >= 0; --k) value = value * z + p.coeffs(k);
            for (int k = 0; k <= p.degree(); ++k) {
                scale += std::abs(p.coeffs(k)) * std::pow(std::max(1.0, std::abs(z)), k);
            }
            CHECK(std::abs(value) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("double roots deduplicate") {
    // (x - 0.5)^2 (x^2 + 4)
    const RealPolynomial sq = from_roots({0.5, 0.5});
    RVector quad(3);
    quad << 4.0, 0.0, 1.0;
    RealPolynomial p;
    p.coeffs = RVector::Zero(5);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) p.coeffs(i + j) += sq.coeffs(i) * quad(j);
    }
    const auto rs = real_roots(p, 1e-6);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0] == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("root count, conjugate pairing, scale invariance") {
    std::mt19937_64 gen(101);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        RealPolynomial p;
        p.coeffs = RVector::NullaryExpr(9, [&](Eigen::Index) { return dist(gen); });
        auto zs = roots(p);
        CHECK(static_cast<int>(zs.size()) == p.degree());

        // complex roots pair up
        for (const Complex& z : zs) {
            if (std::abs(z.imag()) < 1e-8) continue;
            const bool paired = std::any_of(zs.begin(), zs.end(), [&](const Complex& w) {
                return std::abs(w - std::conj(z)) < 1e-8 * (1.0 + std::abs(z));
            });
            CHECK(paired);
        }

        // positive scaling leaves the root set unchanged
        RealPolynomial scaled;
        scaled.coeffs = 37.5 * p.coeffs;
        const auto rs1 = real_roots(p);
        const auto rs2 = real_roots(scaled);
        REQUIRE(rs1.size() == rs2.size());
        for (size_t i = 0; i < rs1.size(); ++i) {
            CHECK(std::abs(rs1[i] - rs2[i]) < 1e-9 * (1.0 + std::abs(rs1[i])));
        }
    }
}

TEST_CASE("degenerate polynomials") {
    RealPolynomial zero;
    zero.coeffs = RVector::Zero(5);
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(roots(zero), std::invalid_argument);

    RealPolynomial constant = from_coeffs({3.0});
    CHECK(constant.degree() == 0);
    CHECK(roots(constant).empty());

    // trailing zeros trim away
    RealPolynomial padded = from_coeffs({2.0, -3.0, 1.0, 0.0, 0.0});
    CHECK(padded.degree() == 2);
    CHECK(real_roots(padded).size() == 2);
}
